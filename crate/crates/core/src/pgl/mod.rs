//! Exact projective linear groups: elements of `PGL_n(K)`, finite subgroup
//! closure, isomorphism-type recognition and conjugacy over finite fields.

mod group_type;
mod matrix;
mod projmat;
mod subgroup;

pub use group_type::{euler_phi, GroupType};
pub use matrix::Matrix;
pub use projmat::{proj_eq, ProjMat};
pub use subgroup::{
    are_conjugate_subgroups, closure_elements, enumerate_pgl2, enumerate_pgl2_q, iso_type, order_profile,
    subgroup_closure, SubgroupRecord, DEFAULT_Q_CAP,
};
