//! Subsets of the integers that are bounded below and contain every integer
//! past some point. Every semigroup and relative ideal in this crate is one of
//! these, stored as a membership window over `[min, frobenius]`.

use std::fmt;

/// A set `X ⊆ ℤ` with `min(X)` finite and `[frobenius + 1, ∞) ⊆ X`.
///
/// Invariants: `min ∈ X`, `min - 1 ∉ X`, `frobenius ∉ X` (unless the set has
/// no gaps above `min`, in which case `frobenius == min - 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CofiniteSet {
    min: i64,
    frobenius: i64,
    window: Vec<bool>,
}

impl CofiniteSet {
    /// Builds the set from a predicate evaluated on `[lo, hi]`; integers below
    /// `lo` are taken as non-members and integers above `hi` as members.
    pub fn from_predicate(lo: i64, hi: i64, mut pred: impl FnMut(i64) -> bool) -> Self {
        let mut first = None;
        let mut x = lo;
        while x <= hi {
            if pred(x) {
                first = Some(x);
                break;
            }
            x += 1;
        }
        let Some(min) = first else {
            let min = lo.max(hi + 1);
            return CofiniteSet {
                min,
                frobenius: min - 1,
                window: Vec::new(),
            };
        };
        let mut window = Vec::with_capacity((hi - min + 1) as usize);
        window.push(true);
        for y in min + 1..=hi {
            window.push(pred(y));
        }
        let last_gap = window.iter().rposition(|&b| !b);
        let frobenius = match last_gap {
            Some(i) => min + i as i64,
            None => min - 1,
        };
        window.truncate((frobenius - min + 1) as usize);
        CofiniteSet {
            min,
            frobenius,
            window,
        }
    }

    /// All integers `>= min`.
    pub fn interval_from(min: i64) -> Self {
        CofiniteSet {
            min,
            frobenius: min - 1,
            window: Vec::new(),
        }
    }

    /// Smallest element.
    pub fn min(&self) -> i64 {
        self.min
    }

    /// Largest integer not in the set.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 1`: every integer from here on is a member.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x > self.frobenius {
            x >= self.min
        } else if x < self.min {
            false
        } else {
            self.window[(x - self.min) as usize]
        }
    }

    pub fn translate(&self, d: i64) -> Self {
        CofiniteSet {
            min: self.min + d,
            frobenius: self.frobenius + d,
            window: self.window.clone(),
        }
    }

    /// Members strictly below the conductor, ascending.
    pub fn finite_members(&self) -> Vec<i64> {
        (self.min..=self.frobenius)
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Non-members in `[min, frobenius]`, ascending.
    pub fn inner_gaps(&self) -> Vec<i64> {
        (self.min..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    pub fn union(&self, other: &CofiniteSet) -> Self {
        let lo = self.min.min(other.min);
        let hi = self.frobenius.max(other.frobenius);
        CofiniteSet::from_predicate(lo, hi, |x| self.contains(x) || other.contains(x))
    }

    pub fn intersection(&self, other: &CofiniteSet) -> Self {
        let lo = self.min.max(other.min);
        let hi = self.frobenius.max(other.frobenius);
        CofiniteSet::from_predicate(lo, hi, |x| self.contains(x) && other.contains(x))
    }

    /// The set with finitely many extra points added.
    pub fn with_points(&self, points: &[i64]) -> Self {
        let lo = points.iter().copied().fold(self.min, i64::min);
        CofiniteSet::from_predicate(lo, self.frobenius, |x| {
            self.contains(x) || points.contains(&x)
        })
    }

    pub fn is_subset(&self, other: &CofiniteSet) -> bool {
        if self.min < other.min {
            return false;
        }
        (self.min..=other.frobenius).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `self ∖ other`, which is always finite; ascending.
    pub fn minus(&self, other: &CofiniteSet) -> Vec<i64> {
        (self.min..=other.frobenius)
            .filter(|&x| self.contains(x) && !other.contains(x))
            .collect()
    }
}

impl fmt::Display for CofiniteSet {
    /// Finite members below the conductor, then the conductor with a `+`,
    /// e.g. `{0,4,5,6,9,10,13,14,15} 17+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.finite_members().iter().map(i64::to_string).collect();
        let start = if self.frobenius < self.min {
            self.min
        } else {
            self.conductor()
        };
        write!(f, "{{{}}} {}+", members.join(","), start)
    }
}

impl fmt::Debug for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_normalizes_bounds() {
        let s = CofiniteSet::from_predicate(-3, 10, |x| x == 0 || x >= 3 && x != 5);
        assert_eq!(s.min(), 0);
        assert_eq!(s.frobenius(), 5);
        assert!(
            s.contains(0) && !s.contains(1) && s.contains(4) && !s.contains(5) && s.contains(6)
        );
        assert!(!s.contains(-1));
    }

    #[test]
    fn empty_range_yields_interval() {
        let s = CofiniteSet::from_predicate(1, 0, |_| false);
        assert_eq!(s, CofiniteSet::interval_from(1));
        assert_eq!(s.frobenius(), 0);
        let t = CofiniteSet::from_predicate(-2, 4, |_| false);
        assert_eq!(t, CofiniteSet::interval_from(5));
    }

    #[test]
    fn display_format() {
        let s = CofiniteSet::from_predicate(0, 20, |x| [0, 9, 13, 14, 15].contains(&x) || x >= 17);
        assert_eq!(s.to_string(), "{0,9,13,14,15} 17+");
        assert_eq!(CofiniteSet::interval_from(0).to_string(), "{} 0+");
    }

    #[test]
    fn set_algebra() {
        let a = CofiniteSet::from_predicate(0, 10, |x| x == 0 || x >= 4);
        let b = CofiniteSet::from_predicate(0, 10, |x| x == 0 || x == 2 || x >= 6);
        assert_eq!(a.minus(&b), vec![4, 5]);
        assert_eq!(b.minus(&a), vec![2]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(a.is_subset(&a.union(&b)));
        assert_eq!(a.with_points(&[3]).finite_members(), vec![0]);
        assert_eq!(a.with_points(&[3]).conductor(), 3);
    }
}
