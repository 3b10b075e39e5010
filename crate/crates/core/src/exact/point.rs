//! Integer parameter triples (k, s, w).

use crate::error::{Error, Result};

/// An integer point (k, s, w) with k even and at least 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityPoint {
    k: i64,
    s: i64,
    w: i64,
}

impl ParityPoint {
    pub fn new(k: i64, s: i64, w: i64) -> Result<Self> {
        if k < 6 || k % 2 != 0 {
            return Err(Error::Argument(format!("k = {k} must be even and >= 6")));
        }
        Ok(ParityPoint { k, s, w })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    /// s + w odd.
    pub fn opposite_parity(&self) -> bool {
        (self.s + self.w) % 2 != 0
    }

    /// Both coordinates strictly inside (3/2, k-2): integers 2 ..= k-3.
    pub fn in_f(&self) -> bool {
        let hi = self.k - 3;
        (2..=hi).contains(&self.s) && (2..=hi).contains(&self.w)
    }

    /// 2 < s < k-2 and w < min(s-1, k-s-1), in integer form.
    pub fn in_d(&self) -> bool {
        self.s > 2 && self.s < self.k - 2 && self.w < (self.s - 1).min(self.k - self.s - 1)
    }

    pub fn sign_k(&self) -> i64 {
        if (self.k / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ParityPoint::new(7, 2, 3).is_err());
        assert!(ParityPoint::new(4, 2, 3).is_err());
        let p = ParityPoint::new(12, 5, 2).unwrap();
        assert!(p.opposite_parity() && p.in_f() && p.in_d());
        let q = ParityPoint::new(12, 3, 4).unwrap();
        assert!(q.opposite_parity() && q.in_f() && !q.in_d());
    }

    #[test]
    fn integer_points_in_f_cap_d_at_k12() {
        let mut pts = Vec::new();
        for s in 2..=9 {
            for w in 2..=9 {
                let p = ParityPoint::new(12, s, w).unwrap();
                if p.opposite_parity() && p.in_f() && p.in_d() {
                    pts.push((s, w));
                }
            }
        }
        assert_eq!(pts, vec![(5, 2), (6, 3), (7, 2)]);
    }
}
