use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Incrementally built row space over the rationals.
///
/// Rows are stored as primitive integer vectors (denominators cleared, content
/// divided out) and reduced fraction-free against the basis in insertion
/// order. Every basis row is zero in the pivot columns of all earlier rows,
/// which is what makes the membership test exact.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    basis: Vec<BasisRow>,
}

#[derive(Clone, Debug)]
struct BasisRow {
    pivot: usize,
    entries: Vec<BigInt>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            basis: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds `row`; returns `false` (and leaves the space unchanged) when the
    /// row already lies in the span.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        self.insert_integer(clear_denominators(row))
    }

    pub fn insert_integer(&mut self, row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        let reduced = self.reduce(row);
        match reduced.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.basis.push(BasisRow {
                    pivot,
                    entries: reduced,
                });
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        self.contains_integer(clear_denominators(row))
    }

    pub fn contains_integer(&self, row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        self.reduce(row).iter().all(Zero::is_zero)
    }

    fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        for b in &self.basis {
            let r = &row[b.pivot];
            if r.is_zero() {
                continue;
            }
            let p = &b.entries[b.pivot];
            let g = r.gcd(p);
            let row_scale = p / &g;
            let basis_scale = r / &g;
            for (x, y) in row.iter_mut().zip(&b.entries) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &row_scale;
                    }
                } else {
                    *x = &*x * &row_scale - y * &basis_scale;
                }
            }
            make_primitive(&mut row);
        }
        row
    }
}

/// Scales a rational row by the lcm of its denominators and divides out the
/// content, giving a primitive integer row spanning the same line.
pub(crate) fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn detects_dependence() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&row(&[1, 2, 3])));
        assert!(s.insert(&row(&[0, 1, 1])));
        assert!(!s.insert(&row(&[2, 5, 7])));
        assert!(s.contains(&row(&[3, 7, 10])));
        assert!(!s.contains(&row(&[0, 0, 1])));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn rational_rows_are_cleared() {
        let mut s = RowSpace::new(2);
        assert!(s.insert(&[ratio(1, 2), ratio(1, 3)]));
        assert!(s.contains(&[rat(3), rat(2)]));
        assert!(!s.contains(&[rat(3), rat(1)]));
    }

    #[test]
    fn zero_row_is_never_added() {
        let mut s = RowSpace::new(4);
        assert!(!s.insert(&row(&[0, 0, 0, 0])));
        assert_eq!(s.rank(), 0);
        assert!(s.contains(&row(&[0, 0, 0, 0])));
    }
}
