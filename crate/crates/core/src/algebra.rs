//! Finite magmas with a distinguished zero, stored as Cayley tables.

use std::fmt;

use crate::error::{Error, Result};

/// Dense element index in `0..order`.
pub type ElementIndex = usize;

/// Largest order accepted by the exhaustive search routines.
pub const MAX_ORDER: usize = 12;

/// Largest order a table may have at all. Holomorphs of small algebras
/// routinely exceed [`MAX_ORDER`], so construction uses a looser bound.
pub const MAX_TABLE_ORDER: usize = 4096;

/// A finite magma `(X; *, 0)`.
///
/// The zero is always stored at index 0; constructors relabel when the
/// caller supplies a different zero. No axiom is assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    order: usize,
    table: Vec<ElementIndex>,
    labels: Option<Vec<String>>,
}

impl FiniteAlgebra {
    /// Builds an algebra from its rows (`rows[x][y] = x * y`) with zero at `zero`.
    pub fn from_rows(rows: &[Vec<ElementIndex>], zero: ElementIndex) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let mut table = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {x} has {} entries, expected {order}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        Self::from_table(order, table, zero)
    }

    /// Builds an algebra from a row-major table.
    pub fn from_table(order: usize, table: Vec<ElementIndex>, zero: ElementIndex) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_TABLE_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::IndexOutOfRange { index: bad, order });
        }
        if zero >= order {
            return Err(Error::IndexOutOfRange { index: zero, order });
        }
        let alg = FiniteAlgebra {
            order,
            table,
            labels: None,
        };
        if zero == 0 {
            Ok(alg)
        } else {
            let mut perm: Vec<usize> = (0..order).collect();
            perm.swap(0, zero);
            Ok(alg.relabel_raw(&perm))
        }
    }

    /// Same as [`from_table`](Self::from_table) for callers that already
    /// guarantee closure and a zero at index 0.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<ElementIndex>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| v < order));
        FiniteAlgebra {
            order,
            table,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable(format!(
                "{} labels for order {}",
                labels.len(),
                self.order
            )));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.contains(char::is_whitespace))
        {
            return Err(Error::InvalidTable(format!(
                "label {bad:?} is empty or has whitespace"
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementIndex {
        0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, x: ElementIndex) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[ElementIndex] {
        &self.table
    }

    pub fn row(&self, x: ElementIndex) -> &[ElementIndex] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<ElementIndex>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// `x * y` without bounds checking beyond the slice index.
    #[inline]
    pub fn op(&self, x: ElementIndex, y: ElementIndex) -> ElementIndex {
        self.table[x * self.order + y]
    }

    /// `x * y`, rejecting out-of-range operands.
    pub fn multiply(&self, x: ElementIndex, y: ElementIndex) -> Result<ElementIndex> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.op(x, y))
    }

    pub fn check_index(&self, x: ElementIndex) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> std::ops::Range<ElementIndex> {
        0..self.order
    }

    /// The map `t -> x * t`.
    pub fn left_translation(&self, x: ElementIndex) -> Result<TranslationMap> {
        self.check_index(x)?;
        Ok(TranslationMap {
            kind: TranslationKind::Left,
            base: x,
            image: self.row(x).to_vec(),
        })
    }

    /// The map `t -> t * x`.
    pub fn right_translation(&self, x: ElementIndex) -> Result<TranslationMap> {
        self.check_index(x)?;
        Ok(TranslationMap {
            kind: TranslationKind::Right,
            base: x,
            image: (0..self.order).map(|t| self.op(t, x)).collect(),
        })
    }

    /// Transports the table along `perm`: element `x` becomes `perm[x]`.
    /// Labels travel with their elements. Panics if `perm` is not a
    /// permutation of the right length.
    pub fn relabel(&self, perm: &[ElementIndex]) -> FiniteAlgebra {
        let n = self.order;
        assert_eq!(perm.len(), n, "relabeling has wrong length");
        // keep the zero pinned at index 0 by swapping it back afterwards
        let z = perm[0];
        let perm: Vec<ElementIndex> = perm
            .iter()
            .map(|&p| {
                if p == z {
                    0
                } else if p == 0 {
                    z
                } else {
                    p
                }
            })
            .collect();
        self.relabel_raw(&perm)
    }

    fn relabel_raw(&self, perm: &[ElementIndex]) -> FiniteAlgebra {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (x, name) in l.iter().enumerate() {
                out[perm[x]] = name.clone();
            }
            out
        });
        FiniteAlgebra {
            order: n,
            table,
            labels,
        }
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        Self::from_table_unchecked(1, vec![0])
    }

    /// `(Z_n, (x - y) mod n, 0)`.
    pub fn zn_subtraction(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let table = (0..n * n).map(|i| (i / n + n - i % n) % n).collect();
        Self::from_table(n, table, 0)
    }

    /// Power set of a `k`-element set under set difference, zero = empty set.
    /// Element indices are the subset bitmasks.
    pub fn powerset(k: usize) -> Result<Self> {
        if k > 12 {
            return Err(Error::OrderTooLarge {
                order: 1 << k.min(20),
                max: MAX_TABLE_ORDER,
            });
        }
        let n = 1usize << k;
        let table = (0..n * n).map(|i| (i / n) & !(i % n)).collect();
        let names: Vec<char> = ('a'..='z').take(k).collect();
        let labels = (0..n)
            .map(|mask| {
                let inner: Vec<String> = (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| names[b].to_string())
                    .collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        Self::from_table(n, table, 0)?.with_labels(labels)
    }

    /// The two-element chain: `0*1 = 0`, `1*0 = 1`, `x*x = 0`.
    pub fn chain2() -> Self {
        Self::from_table_unchecked(2, vec![0, 0, 1, 0])
    }
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteAlgebra(order {}, rows {:?})",
            self.order,
            self.rows()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationKind {
    Left,
    Right,
}

/// `L_x` or `R_x` as a total map on element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationMap {
    pub kind: TranslationKind,
    pub base: ElementIndex,
    pub image: Vec<ElementIndex>,
}

impl TranslationMap {
    pub fn apply(&self, t: ElementIndex) -> ElementIndex {
        self.image[t]
    }
}
