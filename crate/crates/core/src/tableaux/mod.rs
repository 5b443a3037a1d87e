//! Increasing tableaux, reverse semistandard and reverse set-valued
//! tableaux, dotted skew tableaux, and their enumerators.

mod dotted;
pub mod enumerate;
mod increasing;
mod setvalued;

pub use dotted::{Dot, DottedSkewTableau};
pub use enumerate::{
    enumerate_increasing, enumerate_rsvt, enumerate_ssyt, for_each_increasing, for_each_rsvt,
    FnConstraint, IncreasingConstraint, NoConstraint,
};
pub use increasing::IncreasingTableau;
pub use setvalued::{Rssyt, Rsvt};
