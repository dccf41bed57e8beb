//! Arbitrary-precision rationals and their text form.
//!
//! Every exact quantity in the crate is a [`Q`]. The canonical text form is
//! `"p/q"` in lowest terms with `q > 0`; integers print without the `/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;
use std::fmt;

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Parses a comma separated list such as `"3,1/2,-1"`.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Extreme magnitudes: fall back to a ratio of rounded parts.
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// Returns `None` for the zero vector.
pub fn primitive_integer(v: &[Q]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let l = v.iter().fold(BigInt::one(), |acc, x| lcm_big(&acc, x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| gcd_big(&acc, x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// serde adapter: a rational as its canonical string, accepting JSON numbers
/// on input as well.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        d.deserialize_any(QVisitor)
    }

    pub(crate) struct QVisitor;

    impl<'de> Visitor<'de> for QVisitor {
        type Value = Q;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a rational as \"p/q\" or an integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
            parse_q(v).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
            Ok(q(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
            Ok(Q::from_integer(BigInt::from(v)))
        }
    }
}

/// serde adapter for `Vec<Q>`.
pub mod serde_q_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Vec<Q>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of rationals")
            }
            fn visit_seq<A: de::SeqAccess<'de>>(self, mut a: A) -> std::result::Result<Vec<Q>, A::Error> {
                let mut out = Vec::new();
                while let Some(x) = a.next_element::<QWrap>()? {
                    out.push(x.0);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(V)
    }

    struct QWrap(Q);

    impl<'de> serde::Deserialize<'de> for QWrap {
        fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
            d.deserialize_any(super::serde_q::QVisitor).map(QWrap)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_q("6/4").unwrap(), qf(3, 2));
        assert_eq!(fmt_q(&qf(6, -4)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert_eq!(parse_q(" -2 ").unwrap(), q(-2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive_integer(&[qf(1, 2), qf(-3, 4)]).unwrap();
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3)]);
        assert!(primitive_integer(&[q(0), q(0)]).is_none());
        let v = primitive_integer(&[q(0), q(-6)]).unwrap();
        assert_eq!(v, vec![BigInt::from(0), BigInt::from(-1)]);
    }
}
