//! JSON encoding for big integers: a plain number when it fits in an `i64`,
//! otherwise a decimal string. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse().map(JsonInt).map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

pub(crate) fn split(q: &BigRational) -> (JsonInt, JsonInt) {
    (JsonInt(q.numer().clone()), JsonInt(q.denom().clone()))
}

pub(crate) fn join<E: de::Error>(num: JsonInt, den: JsonInt) -> Result<BigRational, E> {
    if den.0 == BigInt::from(0) {
        return Err(E::custom("zero denominator"));
    }
    Ok(BigRational::new(num.0, den.0))
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_large() {
        assert_eq!(serde_json::to_string(&JsonInt(5.into())).unwrap(), "5");
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let json = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(json, "\"123456789012345678901234567890\"");
        assert_eq!(serde_json::from_str::<JsonInt>(&json).unwrap().0, big);
        assert_eq!(serde_json::from_str::<JsonInt>("-3").unwrap().0, BigInt::from(-3));
        assert!(serde_json::from_str::<JsonInt>("\"x\"").is_err());
    }
}
