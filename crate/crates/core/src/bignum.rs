//! Serialization of exact integers that may exceed the range a JSON consumer
//! can hold in a double.

use num_bigint::BigUint;
use serde::Serializer;

/// Largest integer a JSON consumer with `f64` numbers represents exactly.
pub const JSON_SAFE_MAX: u64 = 1 << 53;

/// Serializes as a number up to 2^53 and as a decimal string above it.
pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(value) {
        Ok(v) if v <= JSON_SAFE_MAX => s.serialize_u64(v),
        _ => s.serialize_str(&value.to_string()),
    }
}

/// `ceil(log_base(value))` for `base ≥ 2`: the least `r` with
/// `base^r ≥ value`.
pub fn ceil_log(value: &BigUint, base: usize) -> usize {
    let base = BigUint::from(base.max(2));
    let mut acc = BigUint::from(1u32);
    let mut r = 0;
    while &acc < value {
        acc *= &base;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logs() {
        assert_eq!(ceil_log(&BigUint::from(1u32), 5), 0);
        assert_eq!(ceil_log(&BigUint::from(60u32), 5), 3);
        assert_eq!(ceil_log(&BigUint::from(125u32), 5), 3);
        assert_eq!(ceil_log(&BigUint::from(126u32), 5), 4);
    }
}
