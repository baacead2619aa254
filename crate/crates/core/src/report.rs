//! Serialization helpers shared by report types.

use num_bigint::BigUint;
use serde::Serializer;

/// Big integers are emitted as decimal strings so JSON consumers never
/// round them.
pub fn serialize_biguint<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}
