pub mod abacus;
pub mod classify;
pub mod error;
pub mod gfalg;
pub mod ladders;
pub mod lr;
pub mod specht;
pub mod partitions;

pub use classify::{
    classify_rouquier_block, irreducible_specht, signed_young_label, verify_main_theorem,
    Certificate, IrredVerdict, Method, SignedYoungLabel, Status, VerificationReport,
};
pub use error::{Error, Result};
pub use gfalg::Matrix;
pub use partitions::{Node, Partition};
