//! Integer partitions, used both as cell shapes and as nilpotent-orbit
//! labels for gl_n.

use std::fmt;

use crate::error::CoreError;

/// Weakly decreasing positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, CoreError> {
        parts.retain(|&p| p != 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::Invalid(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition (column counts).
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let mut cols = vec![0u32; max];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Dominance order: `self <= other` iff all partial sums compare.
    /// Both partitions must have the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, CoreError> {
        if self.size() != other.size() {
            return Err(CoreError::SizeMismatch(
                self.size() as usize,
                other.size() as usize,
            ));
        }
        let mut a = 0u64;
        let mut b = 0u64;
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            a += u64::from(self.0.get(i).copied().unwrap_or(0));
            b += u64::from(other.0.get(i).copied().unwrap_or(0));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.transpose(), p);
        assert_eq!(Partition::row(3).transpose(), Partition::column(3));
        assert_eq!(
            Partition::new(vec![4, 2, 1]).unwrap().transpose(),
            Partition::new(vec![3, 2, 1, 1]).unwrap()
        );
    }

    #[test]
    fn transpose_involution_and_dominance_reversal() {
        let parts: Vec<Partition> = vec![
            Partition::new(vec![4]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
            Partition::new(vec![2, 2]).unwrap(),
            Partition::new(vec![2, 1, 1]).unwrap(),
            Partition::new(vec![1, 1, 1, 1]).unwrap(),
        ];
        for p in &parts {
            assert_eq!(&p.transpose().transpose(), p);
            for q in &parts {
                assert_eq!(
                    p.dominance_leq(q).unwrap(),
                    q.transpose().dominance_leq(&p.transpose()).unwrap()
                );
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let p11 = Partition::column(2);
        let p2 = Partition::row(2);
        assert!(p11.dominance_leq(&p2).unwrap());
        let p22 = Partition::new(vec![2, 2]).unwrap();
        let p31 = Partition::new(vec![3, 1]).unwrap();
        assert!(p22.dominance_leq(&p31).unwrap());
        assert!(!p31.dominance_leq(&p22).unwrap());
        assert!(p2.dominance_leq(&Partition::column(3)).is_err());
    }
}
