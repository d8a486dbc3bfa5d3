//! Small helpers around `BigRational`.

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `p/q`, or just `p` for integers.
pub fn format(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<BigRational> {
    let bad = |msg: String| Error::Parse { line: 0, msg };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| bad(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(bad(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

pub fn ceil_i64(r: &BigRational) -> Result<i64> {
    i64::try_from(r.ceil().to_integer()).map_err(|_| Error::Overflow("rational ceiling"))
}

pub fn floor_i64(r: &BigRational) -> Result<i64> {
    i64::try_from(r.floor().to_integer()).map_err(|_| Error::Overflow("rational floor"))
}

pub fn abs(r: &BigRational) -> BigRational {
    r.abs()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`serde_str`] for optional values.
pub mod serde_opt_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&super::format(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| super::parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&ratio(-8, 4)), "-2");
        assert_eq!(parse("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("a/b").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_i64(&ratio(1, 2)).unwrap(), 1);
        assert_eq!(ceil_i64(&ratio(-1, 2)).unwrap(), 0);
        assert_eq!(floor_i64(&ratio(-1, 2)).unwrap(), -1);
    }
}
