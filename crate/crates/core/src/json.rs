//! Serialization helpers: integers beyond 53 bits are written as decimal
//! strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::Serializer;

const SAFE: i64 = 1 << 53;

pub fn big_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(n) if n.abs() <= SAFE => s.serialize_i64(n),
        _ => s.serialize_str(&v.to_string()),
    }
}

pub fn big_ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Wrapped(x))?;
    }
    seq.end()
}

pub fn big_int_rows<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&Row(row))?;
    }
    seq.end()
}

struct Wrapped<'a>(&'a BigInt);

impl serde::Serialize for Wrapped<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big_int(self.0, s)
    }
}

struct Row<'a>(&'a [BigInt]);

impl serde::Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big_ints(self.0, s)
    }
}
