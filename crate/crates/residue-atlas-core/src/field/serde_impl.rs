use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rationalize, QComplex, QReal};

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Int(i64),
    Str(String),
}

impl IntRepr {
    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            IntRepr::Int(n) => Ok(BigInt::from(*n)),
            IntRepr::Str(s) => BigInt::from_str(s.trim()).map_err(|_| alloc::format!("bad integer {:?}", s)),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RatRepr {
    Int(i64),
    Float(f64),
    Frac { num: IntRepr, den: IntRepr },
    Str(String),
}

impl RatRepr {
    fn to_rational(&self) -> Result<BigRational, String> {
        match self {
            RatRepr::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RatRepr::Float(x) => rationalize(*x, 1_000_000)
                .ok_or_else(|| alloc::format!("{} has no rational form with denominator at most 10^6", x)),
            RatRepr::Frac { num, den } => {
                let d = den.to_big()?;
                if d.is_zero() {
                    return Err("zero denominator".to_string());
                }
                Ok(BigRational::new(num.to_big()?, d))
            }
            RatRepr::Str(s) => {
                let s = s.trim();
                if let Some((n, d)) = s.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| alloc::format!("bad rational {:?}", s))?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| alloc::format!("bad rational {:?}", s))?;
                    if d.is_zero() {
                        return Err("zero denominator".to_string());
                    }
                    Ok(BigRational::new(n, d))
                } else {
                    Ok(BigRational::from_integer(
                        BigInt::from_str(s).map_err(|_| alloc::format!("bad rational {:?}", s))?,
                    ))
                }
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RealRepr {
    Ext { rational: RatRepr, sqrt3: RatRepr },
    Plain(RatRepr),
}

impl RealRepr {
    fn to_qreal(&self) -> Result<QReal, String> {
        match self {
            RealRepr::Ext { rational, sqrt3 } => Ok(QReal::new(rational.to_rational()?, sqrt3.to_rational()?)),
            RealRepr::Plain(r) => Ok(QReal::rational(r.to_rational()?)),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComplexRepr {
    Ext { rational: [RatRepr; 2], sqrt3: [RatRepr; 2] },
    Pair(Box<[RealRepr; 2]>),
    Real(RealRepr),
}

struct Rat<'a>(&'a BigRational);

impl Serialize for Rat<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let q = self.0;
        if q.is_integer() {
            return serialize_int(q.numer(), s);
        }
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &Int(q.numer()))?;
        st.serialize_field("den", &Int(q.denom()))?;
        st.end()
    }
}

struct Int<'a>(&'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_int(self.0, s)
    }
}

fn serialize_int<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

impl Serialize for QReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.b.is_zero() {
            Rat(&self.a).serialize(s)
        } else {
            let mut st = s.serialize_struct("QReal", 2)?;
            st.serialize_field("rational", &Rat(&self.a))?;
            st.serialize_field("sqrt3", &Rat(&self.b))?;
            st.end()
        }
    }
}

impl<'de> Deserialize<'de> for QReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        RealRepr::deserialize(d)?.to_qreal().map_err(D::Error::custom)
    }
}

impl Serialize for QComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.re.b.is_zero() && self.im.b.is_zero() {
            [Rat(&self.re.a), Rat(&self.im.a)].serialize(s)
        } else {
            let mut st = s.serialize_struct("QComplex", 2)?;
            st.serialize_field("rational", &[Rat(&self.re.a), Rat(&self.im.a)])?;
            st.serialize_field("sqrt3", &[Rat(&self.re.b), Rat(&self.im.b)])?;
            st.end()
        }
    }
}

impl<'de> Deserialize<'de> for QComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ComplexRepr::deserialize(d)?;
        let out = match r {
            ComplexRepr::Ext { rational, sqrt3 } => {
                let f = |x: &RatRepr| x.to_rational();
                QComplex::new(
                    QReal::new(f(&rational[0]).map_err(D::Error::custom)?, f(&sqrt3[0]).map_err(D::Error::custom)?),
                    QReal::new(f(&rational[1]).map_err(D::Error::custom)?, f(&sqrt3[1]).map_err(D::Error::custom)?),
                )
            }
            ComplexRepr::Pair(p) => QComplex::new(
                p[0].to_qreal().map_err(D::Error::custom)?,
                p[1].to_qreal().map_err(D::Error::custom)?,
            ),
            ComplexRepr::Real(x) => QComplex::from_real(x.to_qreal().map_err(D::Error::custom)?),
        };
        Ok(out)
    }
}
