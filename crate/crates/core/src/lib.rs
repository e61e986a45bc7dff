pub mod bbw;
pub mod berezin;
pub mod error;
pub mod parabolic;
pub mod rational;
pub mod rootsys;
pub mod smodule;
pub mod starprod;
pub mod symbolic;

pub use error::{Error, Result};
