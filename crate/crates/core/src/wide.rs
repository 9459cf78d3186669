//! Serde adapter writing `i128` values as decimal strings, so JSON readers
//! limited to 64-bit integers can still load cut lines and centers.

use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &i128, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<i128, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}
