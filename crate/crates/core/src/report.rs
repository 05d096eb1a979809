//! Machine-readable reports. Every document is JSON with a top-level
//! `schema_version` and `kind`; field order is fixed by the struct
//! definitions so output is byte-stable.

use serde::{Serialize, Serializer};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::fenyves::{fenyves_profile, identity, FenyvesProfile};
use crate::holomorph::{
    build_holomorph, verify_corollaries, verify_fenyves_transfer, verify_theorem10,
    verify_theorem11, verify_theorem12, verify_theorem13, verify_theorem9, Agreement,
    CorollaryReport, Theorem10Report, Theorem13Report, Theorem9Report, TransferTheorem,
};
use crate::morphisms::{automorphism_group, boolean_automorphism_subgroups, AutomorphismGroup};
use crate::props::{
    is_associative, is_bci, is_bci_def1, is_bci_thm1, is_bck, is_boolean_group, is_commutative,
    is_loop, is_p_semisimple, is_quasi_associative, is_quasigroup, PropertyWitness,
};
use crate::search::canonical_form;
use crate::sweep::TheoremMatrix;

pub const SCHEMA_VERSION: u32 = 1;

/// A boolean that may also be vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    True,
    False,
    NotApplicable,
}

impl From<bool> for Status {
    fn from(b: bool) -> Self {
        if b {
            Status::True
        } else {
            Status::False
        }
    }
}

impl From<Option<bool>> for Status {
    fn from(b: Option<bool>) -> Self {
        b.map_or(Status::NotApplicable, Status::from)
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Status::True => s.serialize_bool(true),
            Status::False => s.serialize_bool(false),
            Status::NotApplicable => s.serialize_str("not_applicable"),
        }
    }
}

pub(crate) fn optional_bool<S: Serializer>(
    b: &Option<bool>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    Status::from(*b).serialize(s)
}

/// A sub-report that is omitted for vacuous instances. Serializes as the
/// inner value or the string `"not_applicable"`, never `null`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applicable<T>(pub Option<T>);

impl<T: Serialize> Serialize for Applicable<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.0 {
            Some(v) => v.serialize(s),
            None => s.serialize_str("not_applicable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub order: usize,
    pub bci: bool,
    pub checkers_agree: bool,
    pub definition: PropertyWitness,
    pub conditions: PropertyWitness,
}

pub fn check(a: &FiniteAlgebra) -> CheckReport {
    let definition = is_bci_def1(a);
    let conditions = is_bci_thm1(a);
    CheckReport {
        order: a.order(),
        bci: definition.holds,
        checkers_agree: definition.holds == conditions.holds,
        definition,
        conditions,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FenyvesSummary {
    pub hex: String,
    pub satisfied: Vec<String>,
}

impl From<FenyvesProfile> for FenyvesSummary {
    fn from(p: FenyvesProfile) -> Self {
        FenyvesSummary {
            hex: p.hex(),
            satisfied: p.indices().iter().map(|i| format!("F{i}")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasigroupStatus {
    pub quasigroup_iff_p_semisimple: bool,
    pub loop_iff_associative: bool,
    pub associative_implies_boolean_group: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub canonical_hash: String,
    pub bci: bool,
    pub bck: bool,
    pub p_semisimple: bool,
    pub associative: bool,
    pub commutative: bool,
    pub quasi_associative: bool,
    pub quasigroup: bool,
    #[serde(rename = "loop")]
    pub is_loop: bool,
    pub boolean_group: bool,
    pub theorem7: QuasigroupStatus,
    pub fenyves: FenyvesSummary,
    pub automorphism_group_size: usize,
    pub boolean_subgroup_count: usize,
}

/// Full classification of a BCI-algebra.
pub fn classify(a: &FiniteAlgebra) -> Result<ClassificationReport> {
    if !is_bci(a) {
        return Err(Error::NotBci);
    }
    let associative = is_associative(a).holds;
    let p_semisimple = is_p_semisimple(a).holds;
    let quasigroup = is_quasigroup(a).holds;
    let is_loop = is_loop(a).holds;
    let boolean_group = is_boolean_group(a).holds;
    let group = automorphism_group(a);
    Ok(ClassificationReport {
        order: a.order(),
        canonical_hash: canonical_form(a).hash(),
        bci: true,
        bck: is_bck(a).holds,
        p_semisimple,
        associative,
        commutative: is_commutative(a).holds,
        quasi_associative: is_quasi_associative(a)?.holds,
        quasigroup,
        is_loop,
        boolean_group,
        theorem7: QuasigroupStatus {
            quasigroup_iff_p_semisimple: quasigroup == p_semisimple,
            loop_iff_associative: is_loop == associative,
            associative_implies_boolean_group: !associative || boolean_group,
        },
        fenyves: fenyves_profile(a).into(),
        automorphism_group_size: group.len(),
        boolean_subgroup_count: boolean_automorphism_subgroups(&group).len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferEntry {
    pub index: usize,
    pub theorem: u8,
    pub preconditions_hold: bool,
    pub base: bool,
    pub holomorph: bool,
    pub agree: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HolomorphReport {
    pub autos: Vec<Vec<usize>>,
    pub holomorph_order: usize,
    pub holomorph_bci: bool,
    pub theorem9: Theorem9Report,
    pub theorem10: Theorem10Report,
    pub theorem11: Applicable<Agreement>,
    pub theorem12: Applicable<Agreement>,
    pub theorem13: Applicable<Theorem13Report>,
    pub corollaries: CorollaryReport,
    pub transfer: Vec<TransferEntry>,
    /// True when every agreement above that applies holds.
    pub consistent: bool,
}

/// Reports for one (base, subgroup) pair. Results that presuppose a BCI
/// holomorph are recorded as not applicable when it is not one.
pub fn holomorph_report(
    base: &FiniteAlgebra,
    autos: &AutomorphismGroup,
) -> Result<HolomorphReport> {
    let h = build_holomorph(base, autos)?;
    let holomorph_bci = is_bci(h.algebra());
    let theorem9 = verify_theorem9(base, autos)?;
    let theorem10 = verify_theorem10(base, autos)?;
    let corollaries = verify_corollaries(base, autos)?;
    let (theorem11, theorem12, theorem13) = if holomorph_bci {
        (
            Some(verify_theorem11(base, autos)?),
            Some(verify_theorem12(base, autos)?),
            Some(verify_theorem13(base, autos)?),
        )
    } else {
        (None, None, None)
    };
    let mut transfer = Vec::new();
    for i in TransferTheorem::SUPPORTED
        .into_iter()
        .filter(|_| holomorph_bci)
    {
        let r = verify_fenyves_transfer(base, autos, i)?;
        transfer.push(TransferEntry {
            index: r.index,
            theorem: r.theorem,
            preconditions_hold: r.preconditions_hold,
            base: r.base,
            holomorph: r.holomorph,
            agree: r.agree.into(),
        });
    }
    let consistent = theorem9.agree
        && theorem10.agree
        && corollaries.agree()
        && theorem11.is_none_or(|r| r.agree())
        && theorem12.is_none_or(|r| r.agree())
        && theorem13.as_ref().is_none_or(|r| r.agree)
        && transfer.iter().all(|t| t.agree != Status::False);
    Ok(HolomorphReport {
        autos: autos
            .elements()
            .iter()
            .map(|b| b.image().to_vec())
            .collect(),
        holomorph_order: h.algebra().order(),
        holomorph_bci,
        theorem9,
        theorem10,
        theorem11: Applicable(theorem11),
        theorem12: Applicable(theorem12),
        theorem13: Applicable(theorem13),
        corollaries,
        transfer,
        consistent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub identity: String,
    pub name: Option<String>,
    pub associative_class: bool,
}

pub fn catalog() -> Vec<CatalogEntry> {
    (1..=60)
        .map(|i| {
            let f = identity(i).expect("catalog covers 1..=60");
            CatalogEntry {
                index: i,
                identity: f.text.clone(),
                name: f.name.clone(),
                associative_class: f.is_associative_class,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub order: usize,
    pub up_to_isomorphism: bool,
    pub count: usize,
    pub bck: usize,
    pub p_semisimple: usize,
    pub associative: usize,
    pub proper_bci: usize,
}

pub fn enumeration_summary(
    order: usize,
    up_to_isomorphism: bool,
    algebras: &[FiniteAlgebra],
) -> EnumerationSummary {
    let count =
        |f: fn(&FiniteAlgebra) -> PropertyWitness| algebras.iter().filter(|a| f(a).holds).count();
    let bck = count(is_bck);
    EnumerationSummary {
        order,
        up_to_isomorphism,
        count: algebras.len(),
        bck,
        p_semisimple: count(is_p_semisimple),
        associative: count(is_associative),
        proper_bci: algebras.len() - bck,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportBody {
    Check(CheckReport),
    Classification(ClassificationReport),
    Holomorph {
        base: ClassificationReport,
        subgroups: Vec<HolomorphReport>,
    },
    Enumeration(EnumerationSummary),
    TheoremMatrix(TheoremMatrix),
    Catalog {
        identities: Vec<CatalogEntry>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: ReportBody,
}

impl ReportDocument {
    pub fn new(body: ReportBody) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
