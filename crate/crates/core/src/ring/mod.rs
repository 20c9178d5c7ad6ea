//! Unramified Witt rings, Eisenstein extensions and their elements.

mod element;
mod extension;
pub(crate) mod fp;
mod log;
pub mod profile;
mod unramified;
pub mod wire;

pub use element::{rational_to_zp, rational_valuation, RamifiedElement};
pub use extension::{Extension, ExtensionKind};
pub use log::{is_one_mod_pi, padic_log, series_cutoff};
pub use profile::{valuation_profile, ValuationProfile};
pub use unramified::{int_valuation, UnramifiedRing};
