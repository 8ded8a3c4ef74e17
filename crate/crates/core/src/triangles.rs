//! Exact integer number triangles: signed Stirling numbers of the first kind,
//! Stirling numbers of the second kind, and r-Whitney numbers of the second kind,
//! plus binomial coefficients and falling factorials.
//!
//! Rows are memoized on demand and cached per (kind, parameters) key, so sweeps
//! over increasing n reuse the lower rows. Computed rows are immutable; concurrent
//! readers always observe identical values.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::rat::Int;

/// Which triangle a [`Triangle`] holds. `Whitney { m: 1, r: 0 }` coincides with
/// `Stirling2` entry-by-entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// Signed Stirling numbers of the first kind: coefficients of the expansion of the
    /// falling factorial into powers, x(x-1)...(x-n+1) = sum_i rows[n][i] x^i.
    Stirling1Signed,
    /// Stirling numbers of the second kind: partitions of an n-set into k blocks.
    Stirling2,
    /// r-Whitney numbers of the second kind: (mx+r)^n = sum_k m^k rows[n][k] x(x-1)...(x-k+1).
    ///
    /// The recurrence is well defined for any integer m, r; the combinatorial setting
    /// has m >= 1 and r >= 0.
    Whitney { m: i64, r: i64 },
}

impl TriangleKind {
    /// Multiplier of `rows[n-1][k]` in the two-term recurrence for `rows[n][k]`.
    fn carry(&self, n: usize, k: usize) -> Int {
        match self {
            TriangleKind::Stirling1Signed => -Int::from(n as i64 - 1),
            TriangleKind::Stirling2 => Int::from(k as u64),
            TriangleKind::Whitney { m, r } => Int::from(*m) * Int::from(k as u64) + Int::from(*r),
        }
    }
}

/// A lower-triangular table of exact integers, extended row-by-row on demand.
/// `rows[n]` has length n+1 and `rows[0] == [1]` for every kind.
pub struct Triangle {
    kind: TriangleKind,
    rows: RwLock<Vec<Arc<Vec<Int>>>>,
}

impl Triangle {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle {
            kind,
            rows: RwLock::new(vec![Arc::new(vec![Int::one()])]),
        }
    }

    pub fn kind(&self) -> &TriangleKind {
        &self.kind
    }

    /// Row n, computing and caching any missing rows first.
    pub fn row(&self, n: usize) -> Arc<Vec<Int>> {
        {
            let rows = self.rows.read().expect("triangle lock poisoned");
            if let Some(row) = rows.get(n) {
                return row.clone();
            }
        }
        let mut rows = self.rows.write().expect("triangle lock poisoned");
        while rows.len() <= n {
            let idx = rows.len();
            let prev = rows.last().expect("row 0 present").clone();
            let mut next = Vec::with_capacity(idx + 1);
            for k in 0..=idx {
                let mut v = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    Int::zero()
                };
                if k < idx {
                    v += self.kind.carry(idx, k) * &prev[k];
                }
                next.push(v);
            }
            rows.push(Arc::new(next));
        }
        rows[n].clone()
    }
}

fn registry() -> &'static Mutex<HashMap<TriangleKind, Arc<Triangle>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<TriangleKind, Arc<Triangle>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared, memoized triangle for `kind`.
pub fn triangle(kind: TriangleKind) -> Arc<Triangle> {
    let mut map = registry().lock().expect("triangle registry poisoned");
    map.entry(kind.clone())
        .or_insert_with(|| Arc::new(Triangle::new(kind)))
        .clone()
}

/// Row n of the signed Stirling numbers of the first kind.
pub fn stirling1_row(n: usize) -> Vec<Int> {
    triangle(TriangleKind::Stirling1Signed).row(n).to_vec()
}

/// Row n of the Stirling numbers of the second kind.
pub fn stirling2_row(n: usize) -> Vec<Int> {
    triangle(TriangleKind::Stirling2).row(n).to_vec()
}

/// Row n of the r-Whitney numbers of the second kind for parameters (m, r).
pub fn whitney_row(m: i64, r: i64, n: usize) -> Vec<Int> {
    triangle(TriangleKind::Whitney { m, r }).row(n).to_vec()
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

/// Falling factorial x(x-1)...(x-k+1); the empty product at k = 0 is 1.
pub fn falling_factorial(x: i64, k: u32) -> Int {
    let mut acc = Int::one();
    for i in 0..k as i64 {
        acc *= Int::from(x - i);
    }
    acc
}
