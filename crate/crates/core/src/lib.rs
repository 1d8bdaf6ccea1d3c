//! Exact symbolic computation in the two-parameter braided quantum group
//! O_{p,q}(SL2): rewriting normal forms, braided Hopf structure, free
//! resolutions, Ext and Hochschild tables, the Nakayama automorphism, and
//! the bosonization isomorphism with O_{p,q}(GL2).

pub mod boson;
pub mod braided;
pub mod cli;
pub mod exactla;
pub mod homology;
pub mod hopf;
pub mod ncalg;
pub mod report;
pub mod scalar;
pub mod sl2;
