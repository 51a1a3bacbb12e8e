//! Partitions, compositions, multipartitions and standard Young tableaux.

use std::fmt;

use crate::error::{AlgebraError, Result};

/// Weakly decreasing sequence of nonnegative parts (trailing zeros allowed).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Invalid(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Accepts any integer vector; fails unless it is weakly decreasing and nonnegative.
    pub fn from_weight(w: &[i64]) -> Result<Self> {
        if w.iter().any(|&x| x < 0) {
            return Err(AlgebraError::Invalid(format!("negative part in {w:?}")));
        }
        Self::new(w.iter().map(|&x| x as usize).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Nonzero parts.
    pub fn shape(&self) -> Vec<usize> {
        self.0.iter().copied().filter(|&x| x > 0).collect()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Standard Young tableaux of this shape, in a fixed order.
    ///
    /// A tableau is returned as the row index of each entry `0..size`.
    pub fn standard_tableaux(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        let size = self.size();
        let mut out = Vec::new();
        let mut filled = vec![0usize; shape.len()];
        let mut rows = Vec::with_capacity(size);
        fill(&shape, &mut filled, &mut rows, size, &mut out);
        out
    }

    pub fn count_standard_tableaux(&self) -> usize {
        // hook length formula
        let shape = self.shape();
        let size = self.size();
        let mut num: u128 = 1;
        for k in 1..=size as u128 {
            num *= k;
        }
        let mut den: u128 = 1;
        for (r, &len) in shape.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
                den *= (arm + leg + 1) as u128;
            }
        }
        (num / den) as usize
    }
}

fn fill(shape: &[usize], filled: &mut [usize], rows: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
    if rows.len() == size {
        out.push(rows.clone());
        return;
    }
    for r in 0..shape.len() {
        let ok = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
        if ok {
            filled[r] += 1;
            rows.push(r);
            fill(shape, filled, rows, size, out);
            rows.pop();
            filled[r] -= 1;
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `m` with at most `n` parts, padded with zeros to length `n`,
/// in reverse lexicographic order. For `m = 0` the single empty partition.
pub fn enumerate_partitions(m: usize, n: usize) -> Vec<Partition> {
    if m == 0 {
        return vec![Partition(Vec::new())];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_parts(m, n, m, &mut cur, &mut out);
    out.into_iter()
        .map(|mut p: Vec<usize>| {
            p.resize(n, 0);
            Partition(p)
        })
        .collect()
}

fn gen_parts(rest: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        gen_parts(rest - p, slots - 1, p, cur, out);
        cur.pop();
    }
}

/// Sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(AlgebraError::Invalid(format!("composition with zero part: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Block index of each position `0..size`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (b, &p) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, p));
        }
        out
    }

    /// Starting position of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for &p in &self.0 {
            out.push(acc);
            acc += p;
        }
        out
    }
}

/// Tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multipartition(pub Vec<Partition>);

impl Multipartition {
    pub fn size_type(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.size()).collect()
    }

    pub fn length_type(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.size_type().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let p = enumerate_partitions(2, 2);
        assert_eq!(format!("{p:?}"), "[(2,0), (1,1)]");
        assert_eq!(format!("{:?}", enumerate_partitions(3, 1)), "[(3)]");
        assert_eq!(format!("{:?}", enumerate_partitions(0, 3)), "[()]");
        assert_eq!(enumerate_partitions(5, 5).len(), 7);
    }

    #[test]
    fn tableaux_counts() {
        for m in 1..=6 {
            for p in enumerate_partitions(m, m) {
                assert_eq!(p.standard_tableaux().len(), p.count_standard_tableaux(), "{p}");
            }
        }
        assert_eq!(Partition::new(vec![2, 1]).unwrap().count_standard_tableaux(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
