//! Compositions of a positive integer and the multiplicities attached to
//! them by the operator recursion.

use crate::exact;
use crate::scalar::int;
use crate::Rat;

/// Ordered sequence of positive integers I = (I_1, …, I_r).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics if `parts` is empty or contains a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition needs at least one part");
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be >= 1");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |I| = ΣI_j.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts r.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn last_part(&self) -> u32 {
        *self.parts.last().expect("nonempty")
    }

    /// The reverse composition (I_r, …, I_1).
    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Parts sorted descending: the key under which part products are
    /// cached, since X and Y commute.
    pub fn sorted_parts(&self) -> Vec<u32> {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// Visits every composition of `n` exactly once, in lexicographic order by
/// parts, reusing one buffer. There are 2^{n−1} of them.
pub fn for_each(n: u32, mut visit: impl FnMut(&[u32])) {
    assert!(n >= 1, "compositions are defined for n >= 1");
    let mut buf = Vec::with_capacity(n as usize);
    descend(n, &mut buf, &mut visit);
}

fn descend(remaining: u32, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    for part in 1..=remaining {
        buf.push(part);
        descend(remaining - part, buf, visit);
        buf.pop();
    }
}

/// All compositions of `n` in lexicographic order by parts.
pub fn enumerate(n: u32) -> Vec<Composition> {
    let mut out = Vec::with_capacity(count(n) as usize);
    for_each(n, |parts| out.push(Composition::new(parts.to_vec())));
    out
}

/// 2^{n−1}, the number of compositions of n.
pub fn count(n: u32) -> u64 {
    assert!((1..=63).contains(&n), "composition count overflows u64");
    1u64 << (n - 1)
}

/// The multiplicity
/// m_I = −(−1)^r |I|! (|I|−1)! · Π_j 1/(I_j! (I_j−1)!) · Π_{j<r} 1/(I_j + I_{j+1}),
/// with empty products equal to 1. In particular m_{(N)} = 1.
pub fn multiplicity(i: &Composition) -> Rat {
    let n = i.size();
    let mut m = exact::factorial(n) * exact::factorial(n - 1);
    if i.num_parts() % 2 == 0 {
        m = -m;
    }
    for &p in i.parts() {
        m /= exact::factorial(p) * exact::factorial(p - 1);
    }
    for pair in i.parts().windows(2) {
        m /= int::<Rat>((pair[0] + pair[1]) as i64);
    }
    m
}
