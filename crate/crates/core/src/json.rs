//! Arbitrary-precision integers as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

pub fn number<T: ToString>(value: &T) -> Number {
    Number::from_str(&value.to_string()).expect("integers are valid JSON numbers")
}

pub fn serialize_ints<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    values
        .iter()
        .map(number)
        .collect::<Vec<_>>()
        .serialize(serializer)
}

pub fn deserialize_ints<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> Result<Vec<BigInt>, D::Error> {
    Vec::<Number>::deserialize(deserializer)?
        .iter()
        .map(|n| {
            BigInt::from_str(&n.to_string())
                .map_err(|_| D::Error::custom(format!("{n} is not an integer")))
        })
        .collect()
}
