//! Exact-integer helpers shared by the counting and moment code.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `2^e` for possibly negative `e`.
pub fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as u64)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as u64)
    }
}

/// 2-adic valuation; `None` for zero.
pub fn v2(x: &BigInt) -> Option<u64> {
    if x.is_zero() {
        None
    } else {
        x.trailing_zeros()
    }
}

/// 2-adic valuation of a rational; `None` for zero.
pub fn v2_rational(x: &BigRational) -> Option<i64> {
    let num = v2(x.numer())? as i64;
    let den = v2(x.denom()).unwrap_or(0) as i64;
    Some(num - den)
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rational_frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

/// Serde adapters: integers serialize as JSON numbers when they fit in 64
/// bits and as decimal strings otherwise; rationals as `"p/q"` strings.
pub mod serde_exact {
    use std::str::FromStr;

    use num_bigint::{BigInt, BigUint};
    use num_rational::BigRational;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        U(u64),
        I(i64),
        S(String),
    }

    fn to_repr_int(x: &BigInt) -> Repr {
        if let Some(u) = x.to_u64() {
            Repr::U(u)
        } else if let Some(i) = x.to_i64() {
            Repr::I(i)
        } else {
            Repr::S(x.to_string())
        }
    }

    fn from_repr<T: FromStr + From<u64>, E: serde::de::Error>(
        r: Repr,
        from_i64: impl Fn(i64) -> Option<T>,
    ) -> Result<T, E> {
        match r {
            Repr::U(u) => Ok(T::from(u)),
            Repr::I(i) => from_i64(i).ok_or_else(|| E::custom("negative value")),
            Repr::S(s) => s.parse().map_err(|_| E::custom("bad integer string")),
        }
    }

    pub mod biguint {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
            to_repr_int(&BigInt::from(x.clone())).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
            from_repr(Repr::deserialize(d)?, |_| None)
        }
    }

    pub mod biguint_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
            xs.iter()
                .map(|x| to_repr_int(&BigInt::from(x.clone())))
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(|r| from_repr(r, |_| None))
                .collect()
        }
    }

    pub mod bigint {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            to_repr_int(x).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            from_repr(Repr::deserialize(d)?, |i| Some(BigInt::from(i)))
        }
    }

    pub mod bigint_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            xs.iter().map(to_repr_int).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(|r| from_repr(r, |i| Some(BigInt::from(i))))
                .collect()
        }
    }

    pub mod rational {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
            crate::exact::fmt_rational(x).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
            let s = String::deserialize(d)?;
            crate::exact::parse_rational(&s).ok_or_else(|| D::Error::custom("bad rational"))
        }
    }

    pub mod rational_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            xs.iter()
                .map(crate::exact::fmt_rational)
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| {
                    crate::exact::parse_rational(s).ok_or_else(|| D::Error::custom("bad rational"))
                })
                .collect()
        }
    }
}
