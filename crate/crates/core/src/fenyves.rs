//! The sixty identities of Bol-Moufang type F1..F60.
//!
//! Identities are kept as text in the usual loop-theory shorthand
//! (juxtaposition binds tighter than `.`, so `xy.zx` is `(x*y)*(z*x)`) and
//! parsed once into term trees.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{ElementIndex, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::props::{first_violation, Property, PropertyWitness};

/// Indices whose identity, on a BCI-algebra, does not force associativity.
pub const NON_ASSOCIATIVE_CLASS: [usize; 14] =
    [3, 5, 8, 19, 21, 29, 39, 42, 46, 52, 54, 55, 56, 59];

const CATALOG_SOURCE: &str = "\
1  | xy.zx = (xy.z)x |
2  | xy.zx = (x.yz)x | Moufang identity
3  | xy.zx = x(y.zx) |
4  | xy.zx = x(yz.x) | Moufang identity
5  | (xy.z)x = (x.yz)x |
6  | (xy.z)x = x(y.zx) | extra identity
7  | (xy.z)x = x(yz.x) |
8  | (x.yz)x = x(y.zx) |
9  | (x.yz)x = x(yz.x) |
10 | x(y.zx) = x(yz.x) |
11 | xy.xz = (xy.x)z |
12 | xy.xz = (x.yx)z |
13 | xy.xz = x(yx.z) | extra identity
14 | xy.xz = x(y.xz) |
15 | (xy.x)z = (x.yx)z |
16 | (xy.x)z = x(yx.z) |
17 | (xy.x)z = x(y.xz) | Moufang identity
18 | (x.yx)z = x(yx.z) |
19 | (x.yx)z = x(y.xz) | left Bol identity
20 | x(yx.z) = x(y.xz) |
21 | yx.zx = (yx.z)x |
22 | yx.zx = (y.xz)x | extra identity
23 | yx.zx = y(xz.x) |
24 | yx.zx = y(x.zx) |
25 | (yx.z)x = (y.xz)x |
26 | (yx.z)x = y(xz.x) | right Bol identity
27 | (yx.z)x = y(x.zx) | Moufang identity
28 | (y.xz)x = y(xz.x) |
29 | (y.xz)x = y(x.zx) |
30 | y(xz.x) = y(x.zx) |
31 | yx.xz = (yx.x)z |
32 | yx.xz = (y.xx)z |
33 | yx.xz = y(xx.z) |
34 | yx.xz = y(x.xz) |
35 | (yx.x)z = (y.xx)z |
36 | (yx.x)z = y(xx.z) | RC identity
37 | (yx.x)z = y(x.xz) | C identity
38 | (y.xx)z = y(xx.z) |
39 | (y.xx)z = y(x.xz) | LC identity
40 | y(xx.z) = y(x.xz) |
41 | xx.yz = (x.xy)z | LC identity
42 | xx.yz = (xx.y)z |
43 | xx.yz = x(x.yz) |
44 | xx.yz = x(xy.z) |
45 | (x.xy)z = (xx.y)z |
46 | (x.xy)z = x(x.yz) | LC identity
47 | (x.xy)z = x(xy.z) |
48 | (xx.y)z = x(x.yz) | LC identity
49 | (xx.y)z = x(xy.z) |
50 | x(x.yz) = x(xy.z) |
51 | yz.xx = (yz.x)x |
52 | yz.xx = (y.zx)x |
53 | yz.xx = y(zx.x) | RC identity
54 | yz.xx = y(z.xx) |
55 | (yz.x)x = (y.zx)x |
56 | (yz.x)x = y(zx.x) | RC identity
57 | (yz.x)x = y(z.xx) | RC identity
58 | (y.zx)x = y(zx.x) |
59 | (y.zx)x = y(z.xx) |
60 | y(zx.x) = y(z.xx) |
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    fn slot(self) -> usize {
        self as usize
    }

    fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }

    fn letter(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn product(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    /// Leaves read left to right.
    pub fn leaves(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Var>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Mul(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Mul(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Evaluates the term with `assignment[0..3]` giving the values of x, y, z.
    pub fn eval(&self, a: &FiniteAlgebra, assignment: &[ElementIndex; 3]) -> ElementIndex {
        match self {
            Term::Var(v) => assignment[v.slot()],
            Term::Mul(l, r) => a.op(l.eval(a, assignment), r.eval(a, assignment)),
        }
    }

    /// Parses the shorthand notation: letters `x y z`, juxtaposition
    /// (left-associative, binds tightest), `.` (looser), and parentheses.
    pub fn parse(src: &str) -> Result<Term> {
        let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = TermParser {
            chars: &chars,
            pos: 0,
        };
        let t = p.dotted()?;
        if p.pos != chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{}", v.letter()),
            Term::Mul(l, r) => {
                let wrap = |t: &Term| matches!(t, Term::Mul(..));
                if wrap(l) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, "*")?;
                if wrap(r) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

struct TermParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl TermParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn dotted(&mut self) -> Result<Term> {
        let mut t = self.juxtaposed()?;
        while self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let r = self.juxtaposed()?;
            t = Term::product(t, r);
        }
        Ok(t)
    }

    fn juxtaposed(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while matches!(self.chars.get(self.pos), Some(c) if *c == '(' || Var::from_char(*c).is_some())
        {
            let r = self.atom()?;
            t = Term::product(t, r);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.chars.get(self.pos) {
            Some('(') => {
                self.pos += 1;
                let t = self.dotted()?;
                if self.chars.get(self.pos) != Some(&')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(&c) => match Var::from_char(c) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Term::Var(v))
                }
                None => Err(self.error("expected variable or '('")),
            },
            None => Err(self.error("unexpected end of term")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FenyvesIdentity {
    pub index: usize,
    pub lhs: Term,
    pub rhs: Term,
    /// On BCI-algebras this identity implies associativity.
    pub is_associative_class: bool,
    /// Shorthand as written in the catalog, e.g. `xy.zx = (xy.z)x`.
    pub text: String,
    /// Classical name, e.g. "left Bol identity".
    pub name: Option<String>,
}

impl FenyvesIdentity {
    pub fn holds_at(&self, a: &FiniteAlgebra, assignment: &[ElementIndex; 3]) -> bool {
        self.lhs.eval(a, assignment) == self.rhs.eval(a, assignment)
    }
}

fn parse_catalog(src: &str) -> Result<Vec<FenyvesIdentity>> {
    let mut out = Vec::with_capacity(60);
    for (lineno, line) in src.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let bad = |message: &str| Error::Parse {
            line: lineno + 1,
            column: 1,
            message: message.to_string(),
        };
        if fields.len() != 3 {
            return Err(bad("expected `index | identity | name`"));
        }
        let index: usize = fields[0].parse().map_err(|_| bad("bad index"))?;
        let (l, r) = fields[1]
            .split_once('=')
            .ok_or_else(|| bad("missing '='"))?;
        let relocate = |e: Error| match e {
            Error::Parse {
                column, message, ..
            } => Error::Parse {
                line: lineno + 1,
                column,
                message,
            },
            other => other,
        };
        out.push(FenyvesIdentity {
            index,
            lhs: Term::parse(l).map_err(relocate)?,
            rhs: Term::parse(r).map_err(relocate)?,
            is_associative_class: !NON_ASSOCIATIVE_CLASS.contains(&index),
            text: fields[1].to_string(),
            name: (!fields[2].is_empty()).then(|| fields[2].to_string()),
        });
    }
    Ok(out)
}

/// All sixty identities, ordered by index.
pub fn identity_catalog() -> &'static [FenyvesIdentity] {
    static CATALOG: OnceLock<Vec<FenyvesIdentity>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_SOURCE).expect("embedded catalog parses"))
}

pub fn identity(i: usize) -> Result<&'static FenyvesIdentity> {
    if (1..=60).contains(&i) {
        Ok(&identity_catalog()[i - 1])
    } else {
        Err(Error::FenyvesIndex(i))
    }
}

pub fn eval_term(t: &Term, a: &FiniteAlgebra, assignment: &[ElementIndex; 3]) -> ElementIndex {
    t.eval(a, assignment)
}

/// Exhaustive check of F_i; the counterexample is the first `(x, y, z)`.
pub fn satisfies_fenyves(a: &FiniteAlgebra, i: usize) -> Result<PropertyWitness> {
    let id = identity(i)?;
    let found = first_violation(a.order(), |[x, y, z]| !id.holds_at(a, &[x, y, z]));
    Ok(match found {
        None => PropertyWitness::pass(Property::Fenyves(i as u8)),
        Some(t) => PropertyWitness::fail(Property::Fenyves(i as u8), 1, t.to_vec()),
    })
}

/// Bit `i - 1` is set iff the algebra satisfies F_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FenyvesProfile(pub u64);

impl FenyvesProfile {
    pub const ALL: FenyvesProfile = FenyvesProfile((1u64 << 60) - 1);

    pub fn satisfies(self, i: usize) -> bool {
        (1..=60).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=60).filter(|&i| self.satisfies(i)).collect()
    }

    pub fn hex(self) -> String {
        format!("{:015x}", self.0)
    }

    pub fn from_hex(s: &str) -> Option<FenyvesProfile> {
        u64::from_str_radix(s, 16)
            .ok()
            .filter(|v| *v <= Self::ALL.0)
            .map(FenyvesProfile)
    }
}

impl Serialize for FenyvesProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

pub fn fenyves_profile(a: &FiniteAlgebra) -> FenyvesProfile {
    let mut bits = 0u64;
    for id in identity_catalog() {
        let ok = first_violation(a.order(), |[x, y, z]| !id.holds_at(a, &[x, y, z])).is_none();
        if ok {
            bits |= 1 << (id.index - 1);
        }
    }
    FenyvesProfile(bits)
}
