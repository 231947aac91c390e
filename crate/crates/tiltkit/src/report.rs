//! Serializable reports. Field order is fixed, maps are ordered, so output is byte-stable.

use std::collections::BTreeMap;

use serde::Serialize;
use tiltkit_core::algebra::BasicAlgebra;
use tiltkit_core::complex::ProjComplex;
use tiltkit_core::linalg::format_scalar;
use tiltkit_core::module::{loewy_layers, projective, projective_sum};
use tiltkit_core::tilting::{
    GenerationStatus, NuStableReport, SimpleImage, StableImageCertificate, TiltingReport,
};
use tiltkit_core::Profile;

use crate::format::{AlgebraFile, ComplexFile, ModuleFile};

pub fn name(a: &BasicAlgebra, v: usize) -> String {
    a.quiver().vertices()[v].clone()
}

pub fn names(a: &BasicAlgebra, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| name(a, v)).collect()
}

/// `"P(2) ⊕ P(3)"`, or `"0"`.
pub fn sum_display(a: &BasicAlgebra, vs: &[usize]) -> String {
    if vs.is_empty() {
        return String::from("0");
    }
    vs.iter().map(|&v| format!("P({})", name(a, v))).collect::<Vec<_>>().join(" ⊕ ")
}

/// Loewy layers as `1/{2,3}/1`.
pub fn loewy_display(a: &BasicAlgebra, layers: &[Vec<usize>]) -> String {
    layers
        .iter()
        .map(|dims| {
            let parts: Vec<String> =
                dims.iter().enumerate().flat_map(|(v, &n)| std::iter::repeat_n(name(a, v), n)).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("{{{}}}", parts.join(","))
            }
        })
        .collect::<Vec<_>>()
        .join("/")
}

fn cartan_rows(a: &BasicAlgebra) -> Vec<Vec<String>> {
    let c = a.cartan();
    (0..c.rows()).map(|i| c.row(i).iter().map(format_scalar).collect()).collect()
}

#[derive(Serialize)]
pub struct ProjectiveRow {
    pub vertex: String,
    pub dims: Vec<usize>,
    pub loewy: String,
}

#[derive(Serialize)]
pub struct AlgReport {
    pub report: &'static str,
    pub dim: usize,
    pub vertices: Vec<String>,
    pub arrows: usize,
    pub basis: Vec<String>,
    /// Entry `(i, j)` is `dim e_j A e_i`.
    pub cartan: Vec<Vec<String>>,
    pub loewy_length: usize,
    /// Dimensions of the radical layers of `A`.
    pub radical_layers: Vec<usize>,
    /// `P1: 1/2/1` per indecomposable projective.
    pub loewy_table: Vec<String>,
    pub projectives: Vec<ProjectiveRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

pub fn alg_report(a: &BasicAlgebra) -> AlgReport {
    let all: Vec<usize> = (0..a.num_vertices()).collect();
    let layers = loewy_layers(a, &projective_sum(a, &all));
    let projectives: Vec<ProjectiveRow> = (0..a.num_vertices())
        .map(|v| {
            let p = projective(a, v);
            ProjectiveRow { vertex: name(a, v), dims: p.dims().to_vec(), loewy: loewy_display(a, &loewy_layers(a, &p)) }
        })
        .collect();
    AlgReport {
        report: "alg-check",
        dim: a.dim(),
        vertices: a.quiver().vertices().to_vec(),
        arrows: a.quiver().arrows().len(),
        basis: a.basis().iter().map(|p| p.display(a.quiver())).collect(),
        cartan: cartan_rows(a),
        loewy_length: layers.len(),
        radical_layers: layers.iter().map(|l| l.iter().sum()).collect(),
        loewy_table: projectives.iter().map(|p| format!("P{}: {}", p.vertex, p.loewy)).collect(),
        projectives,
        recheck: None,
    }
}

#[derive(Serialize)]
pub struct NuRow {
    pub vertex: String,
    pub projective_injective: bool,
    pub nu_image: Option<String>,
    pub in_e: bool,
}

#[derive(Serialize)]
pub struct NustReport {
    pub report: &'static str,
    pub e: Vec<String>,
    pub e_display: String,
    pub projectives: Vec<NuRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

fn nu_rows(a: &BasicAlgebra, r: &NuStableReport) -> Vec<NuRow> {
    r.projectives
        .iter()
        .map(|p| NuRow {
            vertex: name(a, p.vertex),
            projective_injective: p.projective_injective,
            nu_image: p.nu_image.map(|u| name(a, u)),
            in_e: p.in_e,
        })
        .collect()
}

pub fn nust_report(a: &BasicAlgebra, r: &NuStableReport) -> NustReport {
    NustReport {
        report: "nust",
        e: names(a, &r.e),
        e_display: format!("E = {}", sum_display(a, &r.e)),
        projectives: nu_rows(a, r),
        recheck: None,
    }
}

#[derive(Serialize)]
pub struct SummandRow {
    pub terms: BTreeMap<i32, Vec<String>>,
    pub multiplicity: usize,
}

pub fn summand_rows(a: &BasicAlgebra, s: &[(ProjComplex, usize)]) -> Vec<SummandRow> {
    s.iter()
        .map(|(c, m)| SummandRow {
            terms: if c.is_zero() { BTreeMap::new() } else { c.degrees().map(|d| (d, names(a, c.term(d)))).collect() },
            multiplicity: *m,
        })
        .collect()
}

#[derive(Serialize)]
pub struct TiltingSection {
    pub hom_dims: BTreeMap<i32, usize>,
    pub self_orthogonal: bool,
    pub k0_matrix: Vec<Vec<i64>>,
    pub k0_unimodular: bool,
    pub generation_status: &'static str,
    pub basic: bool,
    pub summands: Vec<SummandRow>,
    pub split_local: bool,
    pub verdict: bool,
}

pub fn tilting_section(a: &BasicAlgebra, r: &TiltingReport) -> TiltingSection {
    TiltingSection {
        hom_dims: r.hom_dims.clone(),
        self_orthogonal: r.self_orthogonal,
        k0_matrix: r.k0_matrix.clone(),
        k0_unimodular: r.k0_unimodular,
        generation_status: match r.generation_status {
            GenerationStatus::ProvedByConstruction => "proved-by-construction",
            GenerationStatus::K0NecessaryOnly => "k0-necessary-only",
        },
        basic: r.basic,
        summands: summand_rows(a, &r.decomposition.summands),
        split_local: r.decomposition.split_local,
        verdict: r.is_tilting() && r.basic,
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub report: &'static str,
    pub radical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilting: Option<TiltingSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

#[derive(Serialize)]
pub struct ConstructReport {
    pub report: &'static str,
    pub p: Vec<String>,
    pub q: Vec<String>,
    pub r: usize,
    pub s: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub tilting: TiltingSection,
    pub complex: ComplexFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

#[derive(Serialize)]
pub struct EndVertex {
    pub vertex: String,
    pub summand: BTreeMap<i32, Vec<String>>,
}

#[derive(Serialize)]
pub struct EndalgReport {
    pub report: &'static str,
    pub dim: usize,
    pub loewy_length: usize,
    pub vertices: Vec<EndVertex>,
    pub cartan: Vec<Vec<String>>,
    pub relations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub algebra: AlgebraFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

pub fn end_vertices(a: &BasicAlgebra, b: &BasicAlgebra, summands: &[ProjComplex]) -> Vec<EndVertex> {
    summands
        .iter()
        .enumerate()
        .map(|(i, c)| EndVertex {
            vertex: name(b, i),
            summand: if c.is_zero() { BTreeMap::new() } else { c.degrees().map(|d| (d, names(a, c.term(d)))).collect() },
        })
        .collect()
}

pub fn relation_strings(b: &BasicAlgebra) -> Vec<String> {
    b.relations().iter().map(|r| r.display(b.quiver())).collect()
}

pub fn cartan_of(b: &BasicAlgebra) -> Vec<Vec<String>> {
    cartan_rows(b)
}

#[derive(Serialize)]
pub struct ConditionRow {
    pub vertex: String,
    pub off_degrees: Vec<i32>,
    pub multiplicity_t0: usize,
    pub a: bool,
    pub b: bool,
}

#[derive(Serialize)]
pub struct SimpleImageRow {
    pub vertex: String,
    pub profile: BTreeMap<i32, Vec<usize>>,
    pub h0_dims: Vec<usize>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct NustableReport {
    pub report: &'static str,
    pub e: Vec<String>,
    pub projectives: Vec<NuRow>,
    pub conditions: Vec<ConditionRow>,
    pub t_pm_in_e: bool,
    pub simple_images: Vec<SimpleImageRow>,
    pub simple_images_pass: bool,
    pub criteria_agree: bool,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

pub fn nustable_report(a: &BasicAlgebra, r: &NuStableReport, simples: &[SimpleImage]) -> NustableReport {
    let verdict = r.verdict == Some(true);
    let simple_pass = simples.iter().all(|s| s.pass);
    NustableReport {
        report: "nustable-check",
        e: names(a, &r.e),
        projectives: nu_rows(a, r),
        conditions: r
            .conditions
            .iter()
            .map(|c| ConditionRow {
                vertex: name(a, c.vertex),
                off_degrees: c.off_degrees.clone(),
                multiplicity_t0: c.multiplicity_t0,
                a: c.a,
                b: c.b,
            })
            .collect(),
        t_pm_in_e: r.t_pm_in_e == Some(true),
        simple_images: simples
            .iter()
            .map(|s| SimpleImageRow {
                vertex: name(a, s.vertex),
                profile: s.profile.clone(),
                h0_dims: s.h0_dims.clone(),
                pass: s.pass,
            })
            .collect(),
        simple_images_pass: simple_pass,
        criteria_agree: simple_pass == verdict,
        verdict,
        recheck: None,
    }
}

#[derive(Serialize)]
pub struct StableImageReport {
    pub report: &'static str,
    pub profile: Profile,
    pub concentrated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recheck: Option<bool>,
}

pub fn stable_image_report(c: &StableImageCertificate, module: ModuleFile) -> StableImageReport {
    StableImageReport {
        report: "stable-image",
        profile: c.profile.clone(),
        concentrated: true,
        hom_dim: Some(c.hom_dim),
        module: Some(module),
        recheck: None,
    }
}

/// Line-oriented rendering of a JSON value: `path: scalar`.
pub fn to_text(v: &serde_json::Value) -> String {
    fn walk(prefix: &str, v: &serde_json::Value, out: &mut String) {
        use serde_json::Value;
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, out);
                }
            }
            Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let parts: Vec<String> = xs.iter().map(scalar).collect();
                out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
            }
            Value::Array(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
        }
    }
    fn scalar(v: &serde_json::Value) -> String {
        match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}
