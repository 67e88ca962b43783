//! The exact ordered field every computation runs over.
//!
//! Tightness of an inequality and ties between step lengths are decided by
//! exact equality, so only exact scalar types implement [`Scalar`]. The blanket
//! implementation covers [`Ratio<T>`] for any signed machine or big integer,
//! which gives both [`crate::Rational`] (arbitrary precision) and
//! [`crate::SmallRational`] (`i64` backed, overflow panics in debug builds).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Reasons a textual rational can be rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    /// Not of the form `P` or `P/Q` with integer `P` and `Q`.
    Malformed,
    /// `Q` parsed as zero.
    ZeroDenominator,
    /// `Q` parsed as negative.
    NegativeDenominator,
}

pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    fn from_int(value: i64) -> Self;

    /// Exact `numer / denom`; panics when `denom == 0`.
    fn from_fraction(numer: i64, denom: i64) -> Self;

    /// Parses `P` or `P/Q` where `P` is an optionally signed integer and `Q`
    /// a positive integer.
    fn parse_exact(text: &str) -> Result<Self, ScalarParseError>;

    /// Always `P/Q` in lowest terms with `Q > 0`, including `0/1` and `2/1`.
    fn canonical_string(&self) -> String;

    /// `P` for integers, `P/Q` otherwise.
    fn compact_string(&self) -> String;

    /// Lossy conversion for logging and summaries only.
    fn approx_f64(&self) -> f64;

    /// `(numer, denom)` in lowest terms when both fit in an `i128`.
    fn small_fraction(&self) -> Option<(i128, i128)>;
}

impl<I> Scalar for Ratio<I>
where
    I: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static,
{
    fn from_int(value: i64) -> Self {
        Ratio::from_integer(I::from_i64(value).expect("integer out of range for scalar"))
    }

    fn from_fraction(numer: i64, denom: i64) -> Self {
        let n = I::from_i64(numer).expect("integer out of range for scalar");
        let d = I::from_i64(denom).expect("integer out of range for scalar");
        Ratio::new(n, d)
    }

    fn parse_exact(text: &str) -> Result<Self, ScalarParseError> {
        fn integer<I: FromStr>(s: &str) -> Result<I, ScalarParseError> {
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ScalarParseError::Malformed);
            }
            s.parse().map_err(|_| ScalarParseError::Malformed)
        }
        match text.split_once('/') {
            None => Ok(Ratio::from_integer(integer(text)?)),
            Some((p, q)) => {
                let numer: I = integer(p)?;
                let denom: I = integer(q)?;
                if denom.is_zero() {
                    Err(ScalarParseError::ZeroDenominator)
                } else if denom.is_negative() {
                    Err(ScalarParseError::NegativeDenominator)
                } else {
                    Ok(Ratio::new(numer, denom))
                }
            }
        }
    }

    fn canonical_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn compact_string(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            self.canonical_string()
        }
    }

    fn approx_f64(&self) -> f64 {
        let n: f64 = self.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = self.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    }

    fn small_fraction(&self) -> Option<(i128, i128)> {
        Some((self.numer().to_i128()?, self.denom().to_i128()?))
    }
}
