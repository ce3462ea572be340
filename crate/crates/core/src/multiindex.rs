use std::cmp::Ordering;
use std::fmt;

/// Exponent vector. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, o: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self - o` when `o` divides `self`.
    pub fn checked_sub(&self, o: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn divides(&self, o: &MultiIndex) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn factorial(&self) -> u128 {
        self.0
            .iter()
            .map(|&e| (1..=e as u128).product::<u128>())
            .product()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All exponent vectors of length `n` with total degree exactly `deg`,
/// in graded-lex order.
pub fn exact_degree(n: usize, deg: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if n == 1 {
            prefix.push(deg);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=deg {
            prefix.push(e);
            rec(n - 1, deg - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if deg == 0 {
            vec![MultiIndex(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    rec(n, deg, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All exponent vectors of length `n` with total degree at most `deg`.
pub fn up_to_degree(n: usize, deg: u32) -> Vec<MultiIndex> {
    (0..=deg).flat_map(|k| exact_degree(n, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = MultiIndex(vec![0, 2]);
        let b = MultiIndex(vec![1, 1]);
        let c = MultiIndex(vec![3, 0]);
        assert!(a < b && b < c);
        assert!(MultiIndex(vec![5, 0]) < MultiIndex(vec![0, 6]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(exact_degree(3, 2).len(), 6);
        assert_eq!(up_to_degree(3, 3).len(), 20);
        let v = up_to_degree(2, 3);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
