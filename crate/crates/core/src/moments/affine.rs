use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{fmt_rational, serde_exact};

/// `constant + a2·a_2^* + a3·a_3^*` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineForm {
    #[serde(with = "serde_exact::rational")]
    pub constant: BigRational,
    #[serde(with = "serde_exact::rational")]
    pub a2: BigRational,
    #[serde(with = "serde_exact::rational")]
    pub a3: BigRational,
}

impl AffineForm {
    pub fn new(constant: BigRational, a2: BigRational, a3: BigRational) -> Self {
        Self { constant, a2, a3 }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(c, BigRational::zero(), BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::constant(BigRational::zero())
    }

    pub fn is_constant(&self) -> bool {
        self.a2.is_zero() && self.a3.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn eval(&self, a2: &BigInt, a3: &BigInt) -> BigRational {
        &self.constant
            + &self.a2 * BigRational::from_integer(a2.clone())
            + &self.a3 * BigRational::from_integer(a3.clone())
    }

    /// Coefficients as `(constant, a2, a3)`.
    pub fn coefficients(&self) -> (&BigRational, &BigRational, &BigRational) {
        (&self.constant, &self.a2, &self.a3)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.constant * k, &self.a2 * k, &self.a3 * k)
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;
    fn add(self, o: &AffineForm) -> AffineForm {
        AffineForm::new(
            &self.constant + &o.constant,
            &self.a2 + &o.a2,
            &self.a3 + &o.a3,
        )
    }
}

impl Sub for &AffineForm {
    type Output = AffineForm;
    fn sub(self, o: &AffineForm) -> AffineForm {
        AffineForm::new(
            &self.constant - &o.constant,
            &self.a2 - &o.a2,
            &self.a3 - &o.a3,
        )
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm::new(-&self.constant, -&self.a2, -&self.a3)
    }
}

impl Mul<&BigRational> for &AffineForm {
    type Output = AffineForm;
    fn mul(self, k: &BigRational) -> AffineForm {
        self.scale(k)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.constant.is_zero() || self.is_constant() {
            f.write_str(&fmt_rational(&self.constant))?;
            wrote = true;
        }
        for (c, name) in [(&self.a2, "a2*"), (&self.a3, "a3*")] {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if mag == BigRational::from_integer(1.into()) {
                f.write_str(name)?;
            } else {
                write!(f, "{}·{name}", fmt_rational(&mag))?;
            }
            wrote = true;
        }
        Ok(())
    }
}
