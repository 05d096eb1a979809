//! Bijections of a finite algebra: automorphisms, autotopisms, the
//! regularity notions built on them, and Boolean subgroups of the
//! automorphism group.
//!
//! Maps act on the right, as in loop theory: `a.then(b)` applies `a` first
//! and `b` second, which is what the product `ab` means in the holomorph.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{ElementIndex, FiniteAlgebra, TranslationMap};
use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Bijection {
    image: Vec<ElementIndex>,
}

impl Bijection {
    pub fn new(image: Vec<ElementIndex>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Bijection { image })
    }

    pub fn identity(n: usize) -> Self {
        Bijection {
            image: (0..n).collect(),
        }
    }

    /// Transposition of `a` and `b` on `0..n`.
    pub fn swap(n: usize, a: ElementIndex, b: ElementIndex) -> Result<Self> {
        let mut image: Vec<_> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::NotBijection(n));
        }
        image.swap(a, b);
        Ok(Bijection { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[ElementIndex] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: ElementIndex) -> ElementIndex {
        self.image[x]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Bijection) -> Bijection {
        Bijection {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Bijection {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Bijection { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Order of the permutation in the symmetric group.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.then(self).is_identity()
    }

    /// Every permutation of `0..n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Bijection> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Bijection>) {
            if cur.len() == n {
                out.push(Bijection { image: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bijection{:?}", self.image)
    }
}

/// A triple `(U, V, W)` with `xU * yV = (x*y)W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Autotopism {
    pub u: Bijection,
    pub v: Bijection,
    pub w: Bijection,
}

impl Autotopism {
    pub fn holds(&self, a: &FiniteAlgebra) -> bool {
        let n = a.order();
        if [&self.u, &self.v, &self.w].iter().any(|b| b.len() != n) {
            return false;
        }
        a.elements().all(|x| {
            a.elements()
                .all(|y| a.op(self.u.apply(x), self.v.apply(y)) == self.w.apply(a.op(x, y)))
        })
    }
}

pub fn is_automorphism(a: &FiniteAlgebra, b: &Bijection) -> bool {
    b.len() == a.order()
        && a.elements().all(|x| {
            a.elements()
                .all(|y| b.apply(a.op(x, y)) == a.op(b.apply(x), b.apply(y)))
        })
}

/// A group of automorphisms, sorted with the identity first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AutomorphismGroup {
    elements: Vec<Bijection>,
}

impl AutomorphismGroup {
    pub fn trivial(n: usize) -> Self {
        AutomorphismGroup {
            elements: vec![Bijection::identity(n)],
        }
    }

    /// Validates that `elements` is a group of automorphisms of `a`.
    pub fn from_elements(a: &FiniteAlgebra, elements: Vec<Bijection>) -> Result<Self> {
        let n = a.order();
        if elements.iter().any(|b| b.len() != n) {
            return Err(Error::NotAutomorphismGroup);
        }
        if !elements.iter().all(|b| is_automorphism(a, b)) {
            return Err(Error::NotAutomorphism);
        }
        let set: BTreeSet<Bijection> = elements.into_iter().collect();
        let g = AutomorphismGroup {
            elements: set.into_iter().collect(),
        };
        if !g.is_group() {
            return Err(Error::NotAutomorphismGroup);
        }
        Ok(g)
    }

    /// Subgroup generated by `generators`, each of which must be an automorphism.
    pub fn generated_by(a: &FiniteAlgebra, generators: &[Bijection]) -> Result<Self> {
        let n = a.order();
        for g in generators {
            if g.len() != n {
                return Err(Error::NotBijection(n));
            }
            if !is_automorphism(a, g) {
                return Err(Error::NotAutomorphism);
            }
        }
        let mut set: BTreeSet<Bijection> = BTreeSet::new();
        set.insert(Bijection::identity(n));
        let mut frontier: Vec<Bijection> = set.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = p.then(g);
                if set.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Ok(AutomorphismGroup {
            elements: set.into_iter().collect(),
        })
    }

    pub fn elements(&self) -> &[Bijection] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, b: &Bijection) -> Option<usize> {
        self.elements.binary_search(b).ok()
    }

    /// Contains the identity, closed under composition and inverses.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return false;
        };
        let set: BTreeSet<&Bijection> = self.elements.iter().collect();
        first.is_identity()
            && self.elements.iter().all(|p| {
                set.contains(&p.inverse()) && self.elements.iter().all(|q| set.contains(&p.then(q)))
            })
    }

    /// Abelian with every non-identity element an involution.
    pub fn is_boolean(&self) -> bool {
        self.elements.iter().all(|p| {
            (p.is_identity() || p.is_involution())
                && self.elements.iter().all(|q| p.then(q) == q.then(p))
        })
    }

    pub fn verify(&self, a: &FiniteAlgebra) -> bool {
        self.is_group() && self.elements.iter().all(|b| is_automorphism(a, b))
    }
}

/// All automorphisms of `a` that fix the zero, by backtracking with
/// forward propagation: once `x` and `y` are mapped, `x*y` is forced to
/// map to `xA * yA`.
pub fn automorphism_group(a: &FiniteAlgebra) -> AutomorphismGroup {
    let n = a.order();
    let mut found = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[0] = 0;
    used[0] = true;
    if propagate(a, &mut image, &mut used) {
        search_automorphisms(a, image, used, &mut found);
    }
    found.sort();
    AutomorphismGroup { elements: found }
}

fn search_automorphisms(
    a: &FiniteAlgebra,
    image: Vec<usize>,
    used: Vec<bool>,
    found: &mut Vec<Bijection>,
) {
    let n = a.order();
    let Some(next) = image.iter().position(|&v| v == usize::MAX) else {
        let b = Bijection { image };
        debug_assert!(is_automorphism(a, &b));
        found.push(b);
        return;
    };
    for target in 0..n {
        if used[target] {
            continue;
        }
        let mut img = image.clone();
        let mut u = used.clone();
        img[next] = target;
        u[target] = true;
        if propagate(a, &mut img, &mut u) {
            search_automorphisms(a, img, u, found);
        }
    }
}

/// Closes the partial map under the homomorphism condition. Returns false
/// on conflict.
fn propagate(a: &FiniteAlgebra, image: &mut [usize], used: &mut [bool]) -> bool {
    let n = a.order();
    loop {
        let mut changed = false;
        for x in 0..n {
            if image[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if image[y] == usize::MAX {
                    continue;
                }
                let p = a.op(x, y);
                let want = a.op(image[x], image[y]);
                if image[p] == usize::MAX {
                    if used[want] {
                        return false;
                    }
                    image[p] = want;
                    used[want] = true;
                    changed = true;
                } else if image[p] != want {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Every elementary abelian 2-subgroup of `g`, the trivial one included,
/// sorted by size and then by the sorted element images.
pub fn boolean_automorphism_subgroups(g: &AutomorphismGroup) -> Vec<AutomorphismGroup> {
    let Some(id) = g.elements.first().cloned() else {
        return Vec::new();
    };
    let involutions: Vec<&Bijection> = g.elements.iter().filter(|p| p.is_involution()).collect();
    let mut seen: BTreeSet<Vec<Bijection>> = BTreeSet::new();
    let mut layer = vec![vec![id]];
    seen.insert(layer[0].clone());
    while !layer.is_empty() {
        let mut next = Vec::new();
        for sub in &layer {
            for &t in &involutions {
                if sub.contains(t) || !sub.iter().all(|p| p.then(t) == t.then(p)) {
                    continue;
                }
                let mut grown: Vec<Bijection> = sub.clone();
                grown.extend(sub.iter().map(|p| p.then(t)));
                grown.sort();
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    let mut subs: Vec<Vec<Bijection>> = seen.into_iter().collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs.into_iter()
        .map(|elements| AutomorphismGroup { elements })
        .collect()
}

/// `xU * y = (x*y)U` for all x, y.
pub fn is_lambda_regular(a: &FiniteAlgebra, d: &Bijection) -> bool {
    Autotopism {
        u: d.clone(),
        v: Bijection::identity(a.order()),
        w: d.clone(),
    }
    .holds(a)
}

/// `x * yU = (x*y)U` for all x, y.
pub fn is_rho_regular(a: &FiniteAlgebra, d: &Bijection) -> bool {
    Autotopism {
        u: Bijection::identity(a.order()),
        v: d.clone(),
        w: d.clone(),
    }
    .holds(a)
}

/// Self-adjoint middle regularity: `xU * y = x * yU` for all x, y, i.e.
/// `(U, U^-1, I)` is an autotopism.
pub fn is_mu_regular(a: &FiniteAlgebra, d: &Bijection) -> bool {
    if d.len() != a.order() {
        return false;
    }
    Autotopism {
        u: d.clone(),
        v: d.inverse(),
        w: Bijection::identity(a.order()),
    }
    .holds(a)
}

/// Composition of a translation with a bijection, first the left operand.
fn map_then_bij(m: &TranslationMap, d: &Bijection) -> Vec<ElementIndex> {
    m.image.iter().map(|&t| d.apply(t)).collect()
}

fn bij_then_map(d: &Bijection, m: &TranslationMap) -> Vec<ElementIndex> {
    d.image().iter().map(|&t| m.apply(t)).collect()
}

/// Each regularity notion alongside its two translation-map formulations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    /// λ-regular; `δR_x = R_xδ`; `L_{xδ} = L_xδ`.
    pub lambda: [bool; 3],
    /// ρ-regular; `δL_x = L_xδ`; `R_{xδ} = R_xδ`.
    pub rho: [bool; 3],
    /// μ-regular; `δR_x = R_{xδ}`; `L_{xδ} = δL_x`.
    pub mu: [bool; 3],
}

impl Lemma1Report {
    pub fn agrees(&self) -> bool {
        [self.lambda, self.rho, self.mu]
            .iter()
            .all(|t| t[0] == t[1] && t[1] == t[2])
    }
}

pub fn lemma1_check(a: &FiniteAlgebra, d: &Bijection) -> Result<Lemma1Report> {
    let n = a.order();
    if d.len() != n {
        return Err(Error::NotBijection(n));
    }
    let lefts: Vec<TranslationMap> = a
        .elements()
        .map(|x| a.left_translation(x))
        .collect::<Result<_>>()?;
    let rights: Vec<TranslationMap> = a
        .elements()
        .map(|x| a.right_translation(x))
        .collect::<Result<_>>()?;
    let all = |f: &dyn Fn(ElementIndex) -> bool| a.elements().all(f);

    let lambda = [
        is_lambda_regular(a, d),
        all(&|x| bij_then_map(d, &rights[x]) == map_then_bij(&rights[x], d)),
        all(&|x| lefts[d.apply(x)].image == map_then_bij(&lefts[x], d)),
    ];
    let rho = [
        is_rho_regular(a, d),
        all(&|x| bij_then_map(d, &lefts[x]) == map_then_bij(&lefts[x], d)),
        all(&|x| rights[d.apply(x)].image == map_then_bij(&rights[x], d)),
    ];
    let mu = [
        is_mu_regular(a, d),
        all(&|x| bij_then_map(d, &rights[x]) == rights[d.apply(x)].image),
        all(&|x| lefts[d.apply(x)].image == bij_then_map(d, &lefts[x])),
    ];
    Ok(Lemma1Report { lambda, rho, mu })
}

/// `R_y A = A R_{yA}` and `L_x A = A L_{xA}`, each for all elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    pub right: bool,
    pub left: bool,
}

pub fn lemma2_check(a: &FiniteAlgebra, auto: &Bijection) -> Result<Lemma2Report> {
    if !is_automorphism(a, auto) {
        return Err(Error::NotAutomorphism);
    }
    let mut right = true;
    let mut left = true;
    for x in a.elements() {
        let rx = a.right_translation(x)?;
        let rxa = a.right_translation(auto.apply(x))?;
        right &= map_then_bij(&rx, auto) == bij_then_map(auto, &rxa);
        let lx = a.left_translation(x)?;
        let lxa = a.left_translation(auto.apply(x))?;
        left &= map_then_bij(&lx, auto) == bij_then_map(auto, &lxa);
    }
    Ok(Lemma2Report { right, left })
}
