//! Cayley–Dickson doubling.
//!
//! An element of a doubled algebra is a pair `(a, b)` of elements of the
//! previous level, stored as the two halves of a coefficient slice. The product
//! is
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
//! ```
//!
//! Applying it three times (reals, complex, quaternions, octonions) yields the
//! octonion multiplication table used by [`crate::Octonion`]. The table is a
//! consequence of this rule rather than a hand-entered constant.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Conjugate at any doubling level: keep the real part, negate the rest.
pub fn conjugate<T>(v: &[T]) -> Vec<T>
where
    T: Clone + Neg<Output = T>,
{
    v.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c.clone() })
        .collect()
}

/// Multiplies two elements of the same doubling level. Both slices must have
/// the same power-of-two length.
pub fn product<T>(x: &[T], y: &[T]) -> Vec<T>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    assert_eq!(x.len(), y.len(), "operands from different doubling levels");
    assert!(x.len().is_power_of_two(), "length must be a power of two");
    if x.len() == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let half = x.len() / 2;
    let (a, b) = x.split_at(half);
    let (c, d) = y.split_at(half);

    let ac = product(a, c);
    let db = product(&conjugate(d), b);
    let da = product(d, a);
    let bc = product(b, &conjugate(c));

    ac.into_iter()
        .zip(db)
        .map(|(l, r)| l - r)
        .chain(da.into_iter().zip(bc).map(|(l, r)| l + r))
        .collect()
}

/// One entry of the basis table: `e_i e_j = sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub index: usize,
    pub sign: i8,
}

/// The 8x8 octonion basis table derived from [`product`].
pub fn basis_table() -> &'static [[BasisProduct; 8]; 8] {
    static TABLE: OnceLock<[[BasisProduct; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(derive_table)
}

fn derive_table() -> [[BasisProduct; 8]; 8] {
    let unit = |k: usize| -> Vec<i32> { (0..8).map(|i| i32::from(i == k)).collect() };
    let mut table = [[BasisProduct { index: 0, sign: 1 }; 8]; 8];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let p = product(&unit(i), &unit(j));
            let nonzero: Vec<(usize, i32)> = p
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .collect();
            assert!(
                nonzero.len() == 1 && nonzero[0].1.abs() == 1,
                "basis product e{i} e{j} is not a signed unit: {p:?}"
            );
            *entry = BasisProduct {
                index: nonzero[0].0,
                sign: nonzero[0].1 as i8,
            };
        }
    }
    table
}

/// Renders the imaginary-unit table as text, one row per left factor.
pub fn render_table() -> String {
    let table = basis_table();
    let mut out = String::new();
    for (i, row) in table.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|p| {
                let sign = if p.sign < 0 { "-" } else { "+" };
                format!("{sign}e{}", p.index)
            })
            .collect();
        out.push_str(&format!("e{i}: {}\n", cells.join(" ")));
    }
    out
}
