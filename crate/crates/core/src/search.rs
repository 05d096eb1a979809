//! Exhaustive enumeration of BCI-algebras of a given order, isomorph
//! rejection by canonical form, and witness search over the result.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::fenyves::satisfies_fenyves;
use crate::props::{is_associative, is_bck, is_p_semisimple};

/// Orders above this are refused outright.
pub const MAX_ENUMERATION_ORDER: usize = 6;
/// Orders above this need [`EnumerationOptions::allow_slow`].
pub const FAST_ENUMERATION_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    Bck,
    PSemisimple,
    Associative,
    NonAssociative,
    Fenyves(usize),
}

impl Requirement {
    pub fn holds(self, a: &FiniteAlgebra) -> bool {
        match self {
            Requirement::Bck => is_bck(a).holds,
            Requirement::PSemisimple => is_p_semisimple(a).holds,
            Requirement::Associative => is_associative(a).holds,
            Requirement::NonAssociative => !is_associative(a).holds,
            Requirement::Fenyves(i) => satisfies_fenyves(a, i).is_ok_and(|w| w.holds),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    pub order: usize,
    pub require: Vec<Requirement>,
    pub up_to_isomorphism: bool,
    pub limit: Option<usize>,
    pub allow_slow: bool,
    pub time_budget: Option<Duration>,
}

impl EnumerationOptions {
    pub fn new(order: usize) -> Self {
        EnumerationOptions {
            order,
            require: Vec::new(),
            up_to_isomorphism: true,
            limit: None,
            allow_slow: false,
            time_budget: None,
        }
    }

    pub fn require(mut self, r: Requirement) -> Self {
        self.require.push(r);
        self
    }

    pub fn labelled(mut self) -> Self {
        self.up_to_isomorphism = false;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if self.limit == Some(0) {
            return Err(Error::InvalidTable("limit must be at least 1".into()));
        }
        let cap = if self.allow_slow {
            MAX_ENUMERATION_ORDER
        } else {
            FAST_ENUMERATION_ORDER
        };
        if self.order > cap {
            return Err(Error::OrderTooLarge {
                order: self.order,
                max: cap,
            });
        }
        Ok(())
    }
}

/// Lexicographically least row-major table over all relabelings that fix 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    table: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn to_algebra(&self) -> FiniteAlgebra {
        FiniteAlgebra::from_table_unchecked(
            self.order,
            self.table.iter().map(|&v| v as usize).collect(),
        )
    }

    /// First 16 hex digits of SHA-256 over `order:entries`.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.to_string().as_bytes());
        hex::encode(&h.finalize()[..8])
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order)?;
        for v in &self.table {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

/// Brute-force minimisation over the `(n-1)!` zero-fixing relabelings.
/// Intended for orders up to about 8.
pub fn canonical_form(a: &FiniteAlgebra) -> CanonicalForm {
    let n = a.order();
    assert!(n <= 255, "canonical form needs order below 256");
    let src: Vec<u8> = a.table().iter().map(|&v| v as u8).collect();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best = src.clone();
    let mut cand = vec![0u8; n * n];
    // Heap's algorithm over positions 1..n
    let k = n.saturating_sub(1);
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(1, i + 1);
            } else {
                perm.swap(1 + c[i], i + 1);
            }
            relabel_into(&src, &perm, n, &mut cand);
            if cand < best {
                best.copy_from_slice(&cand);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CanonicalForm {
        order: n,
        table: best,
    }
}

fn relabel_into(src: &[u8], perm: &[u8], n: usize, out: &mut [u8]) {
    for x in 0..n {
        let px = perm[x] as usize;
        for y in 0..n {
            out[px * n + perm[y] as usize] = perm[src[x * n + y] as usize];
        }
    }
}

const UNSET: u8 = u8::MAX;

struct Enumerator<'a> {
    n: usize,
    free: Vec<(usize, usize)>,
    deadline: Option<Instant>,
    expired: &'a AtomicBool,
    nodes: &'a AtomicU64,
}

impl Enumerator<'_> {
    /// Axiom consistency of every fully determined triple, plus
    /// antisymmetry of the cell just written.
    fn consistent(&self, t: &[u8], row: usize, col: usize) -> bool {
        let n = self.n;
        if t[row * n + col] == 0 && row != col && t[col * n + row] == 0 {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                let a = t[x * n + y];
                if a == UNSET {
                    continue;
                }
                for z in 0..n {
                    let b = t[x * n + z];
                    let c = t[z * n + y];
                    if b == UNSET || c == UNSET {
                        continue;
                    }
                    let d = t[a as usize * n + b as usize];
                    if d == UNSET {
                        continue;
                    }
                    let e = t[d as usize * n + c as usize];
                    if e != UNSET && e != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&self, t: &mut [u8], depth: usize, out: &mut Vec<Vec<u8>>) {
        if self.expired.load(Ordering::Relaxed) {
            return;
        }
        if let Some(deadline) = self.deadline {
            if self
                .nodes
                .fetch_add(1, Ordering::Relaxed)
                .is_multiple_of(4096)
                && Instant::now() > deadline
            {
                self.expired.store(true, Ordering::Relaxed);
                return;
            }
        }
        let Some(&(r, c)) = self.free.get(depth) else {
            out.push(t.to_vec());
            return;
        };
        for v in 0..self.n as u8 {
            t[r * self.n + c] = v;
            if self.consistent(t, r, c) {
                self.run(t, depth + 1, out);
            }
        }
        t[r * self.n + c] = UNSET;
    }
}

/// Every labelled table of the given order satisfying the BCI axioms
/// (zero at index 0), in lexicographic order.
fn enumerate_labelled(n: usize, deadline: Option<Instant>) -> Result<Vec<Vec<u8>>> {
    let mut base = vec![UNSET; n * n];
    for x in 0..n {
        base[x * n + x] = 0;
        base[x * n] = x as u8;
    }
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let expired = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);
    let e = Enumerator {
        n,
        free,
        deadline,
        expired: &expired,
        nodes: &nodes,
    };
    let mut results: Vec<Vec<u8>> = match e.free.first() {
        None => {
            let mut out = Vec::new();
            e.run(&mut base, 0, &mut out);
            out
        }
        Some(&(r, c)) => (0..n as u8)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut t = base.clone();
                t[r * n + c] = v;
                let mut out = Vec::new();
                if e.consistent(&t, r, c) {
                    e.run(&mut t, 1, &mut out);
                }
                out
            })
            .collect(),
    };
    if expired.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded);
    }
    results.sort();
    Ok(results)
}

/// BCI-algebras of `opts.order`, filtered by the requirements; isomorphic
/// copies collapse to their canonical form when `up_to_isomorphism`.
/// Output is sorted by canonical form (or by table when labelled).
pub fn enumerate_bci(opts: &EnumerationOptions) -> Result<Vec<FiniteAlgebra>> {
    opts.validate()?;
    let n = opts.order;
    let deadline = opts.time_budget.map(|d| Instant::now() + d);
    let tables = enumerate_labelled(n, deadline)?;
    let mut algebras: Vec<FiniteAlgebra> = if opts.up_to_isomorphism {
        let forms: BTreeMap<CanonicalForm, ()> = tables
            .par_iter()
            .map(|t| {
                let a =
                    FiniteAlgebra::from_table_unchecked(n, t.iter().map(|&v| v as usize).collect());
                (canonical_form(&a), ())
            })
            .collect();
        forms.into_keys().map(|f| f.to_algebra()).collect()
    } else {
        tables
            .into_iter()
            .map(|t| {
                FiniteAlgebra::from_table_unchecked(n, t.into_iter().map(usize::from).collect())
            })
            .collect()
    };
    algebras.retain(|a| opts.require.iter().all(|r| r.holds(a)));
    if let Some(limit) = opts.limit {
        algebras.truncate(limit);
    }
    Ok(algebras)
}

/// Every table of the given order, no pruning, kept when `keep` accepts it.
/// Exponential in `n^2`; the completeness oracle for small orders.
pub fn naive_tables(n: usize, mut keep: impl FnMut(&FiniteAlgebra) -> bool) -> Vec<FiniteAlgebra> {
    let cells = n * n;
    let mut digits = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let a = FiniteAlgebra::from_table_unchecked(n, digits.clone());
        if keep(&a) {
            out.push(a);
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// First algebra, scanning orders `1..=opts.order` in canonical order,
/// that satisfies `want` and not `avoid`.
pub fn find_witness(
    opts: &EnumerationOptions,
    want: impl Fn(&FiniteAlgebra) -> bool,
    avoid: impl Fn(&FiniteAlgebra) -> bool,
) -> Result<Option<FiniteAlgebra>> {
    opts.validate()?;
    for order in 1..=opts.order {
        let mut o = opts.clone();
        o.order = order;
        o.limit = None;
        if let Some(a) = enumerate_bci(&o)?
            .into_iter()
            .find(|a| want(a) && !avoid(a))
        {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
