pub mod character;
pub mod config;
pub mod error;
pub mod eval;
pub mod formal_group;
pub mod parallel;
pub mod report;
pub mod ring;
pub mod sample;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Extension, RamifiedElement, UnramifiedRing};
