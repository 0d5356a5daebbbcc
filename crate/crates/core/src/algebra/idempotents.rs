use crate::exactlin::{vector, Field};

use super::error::AlgebraError;
use super::fd::FdAlgebra;

/// Default cap on `p^dim` for the brute-force idempotent search.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1 << 20;

/// Enumerates every element of `A` over `F_p` and reports whether `0` and
/// (if present) `1` are the only solutions of `e² = e`.
pub fn has_only_trivial_idempotents_bruteforce(a: &FdAlgebra, bound: u128) -> Result<bool, AlgebraError> {
    let Field::Prime(p) = a.field() else {
        return Err(AlgebraError::InfiniteField);
    };
    let n = a.dim();
    let count = (p as u128)
        .checked_pow(n as u32)
        .filter(|&c| c <= bound)
        .ok_or(AlgebraError::EnumerationTooLarge {
            count: (p as u128).saturating_pow(n as u32),
            bound,
        })?;
    let field = a.field();
    let zero = a.zero();
    let mut digits = vec![0u64; n];
    for _ in 0..count {
        let x: Vec<_> = digits.iter().map(|&d| field.from_i64(d as i64)).collect();
        let trivial = x == zero || a.unit() == Some(&x);
        if !trivial && a.mul(&x, &x) == x {
            return Ok(false);
        }
        // odometer increment
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    debug_assert!(vector::is_zero(
        &digits.iter().map(|&d| field.from_i64(d as i64)).collect::<Vec<_>>()
    ));
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{trunc_poly, upper_triangular};

    #[test]
    fn brute_force_examples() {
        let f3 = Field::prime(3).unwrap();
        let k = trunc_poly(1, f3).unwrap();
        assert!(has_only_trivial_idempotents_bruteforce(&k, 1000).unwrap());
        let t2 = upper_triangular(2, f3).unwrap();
        assert!(!has_only_trivial_idempotents_bruteforce(t2.algebra(), 1000).unwrap());
        let dual = trunc_poly(2, f3).unwrap();
        assert!(has_only_trivial_idempotents_bruteforce(&dual, 1000).unwrap());
    }

    #[test]
    fn bound_and_field_errors() {
        let f3 = Field::prime(3).unwrap();
        let t3 = upper_triangular(3, f3).unwrap();
        assert!(matches!(
            has_only_trivial_idempotents_bruteforce(t3.algebra(), 100),
            Err(AlgebraError::EnumerationTooLarge { count: 729, bound: 100 })
        ));
        let q = trunc_poly(2, Field::Rational).unwrap();
        assert!(matches!(
            has_only_trivial_idempotents_bruteforce(&q, 100),
            Err(AlgebraError::InfiniteField)
        ));
    }
}
