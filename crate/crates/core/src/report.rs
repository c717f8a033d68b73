//! Serializable records produced by the command-line front end.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::formula::{self, BoundsReport, FormulaVerdict};
use crate::group::FiniteGroup;
use crate::homspace;
use crate::rational::Rational;
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Formula,
    Both,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Formula => "formula",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub g_spec: String,
    pub h_spec: String,
    pub g_order: usize,
    pub h_order: usize,
    pub method: Method,
    pub lambda_brute: Option<Rational>,
    pub hom_count: Option<usize>,
    pub formula_verdict: Option<FormulaVerdict>,
    pub bounds: BoundsReport,
    /// Image vectors of the two homomorphisms attaining the brute-force value.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    /// Brute force and an applicable formula disagree.
    pub discrepancy: bool,
    /// Milliseconds per phase; only recorded on request so that reports stay
    /// byte-identical between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
}

impl AnalysisReport {
    pub fn compute(
        g_spec: &str,
        g: &FiniteGroup,
        h_spec: &str,
        h: &FiniteGroup,
        method: Method,
        record_timings: bool,
    ) -> Result<Self> {
        let mut timings = BTreeMap::new();
        let mut clock = |name: &str, start: Instant| {
            timings.insert(name.to_string(), start.elapsed().as_millis() as u64);
        };

        let t = Instant::now();
        let bounds = formula::lambda_bounds(g, h)?;
        clock("bounds", t);

        let (mut lambda_brute, mut hom_count, mut witness) = (None, None, None);
        if method != Method::Formula {
            let t = Instant::now();
            let homs = homspace::enumerate_homomorphisms(g, h)?;
            let w = homspace::lambda_over(g, &homs);
            clock("brute", t);
            hom_count = Some(homs.len());
            lambda_brute = Some(w.value);
            witness = w.pair.map(|(a, b)| (a.images(), b.images()));
        }

        let mut formula_verdict = None;
        if method != Method::Brute {
            let t = Instant::now();
            formula_verdict = Some(formula::lambda_formula(g, h)?);
            clock("formula", t);
        }

        let discrepancy = match (&lambda_brute, &formula_verdict) {
            (Some(b), Some(v)) => v.applicable && *b != v.value,
            _ => false,
        };

        Ok(AnalysisReport {
            g_spec: g_spec.to_string(),
            h_spec: h_spec.to_string(),
            g_order: g.order(),
            h_order: h.order(),
            method,
            lambda_brute,
            hom_count,
            formula_verdict,
            bounds,
            witness,
            discrepancy,
            timings: record_timings.then_some(timings),
        })
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "G = {} (order {})", self.g_spec, self.g_order);
        let _ = writeln!(s, "H = {} (order {})", self.h_spec, self.h_order);
        if let Some(l) = self.lambda_brute {
            let _ = writeln!(
                s,
                "lambda (brute force) = {l}  [|Hom(G,H)| = {}]",
                self.hom_count.unwrap_or(0)
            );
            if let Some((a, b)) = &self.witness {
                let _ = writeln!(s, "witness phi = {a:?}");
                let _ = writeln!(s, "witness psi = {b:?}");
            }
        }
        if let Some(v) = &self.formula_verdict {
            let fmt_set = |xs: &std::collections::BTreeSet<usize>| {
                let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", v.join(", "))
            };
            let _ = writeln!(
                s,
                "formula = {}  (applicable: {}; P = {}, N_G = {}, P ∩ N_G = {})",
                v.value,
                v.applicable,
                fmt_set(&v.prime_set),
                fmt_set(&v.index_set),
                fmt_set(&v.intersection)
            );
            if !v.applicable {
                let _ = writeln!(
                    s,
                    "warning: G is not solvable and H is not nilpotent; the formula value is advisory only"
                );
            }
        }
        let _ = writeln!(
            s,
            "bounds: {} <= lambda <= {}",
            self.bounds.lower.value, self.bounds.upper.value
        );
        if self.discrepancy {
            let _ = writeln!(s, "DISCREPANCY: brute force and formula disagree");
        }
        if let Some(t) = &self.timings {
            for (k, v) in t {
                let _ = writeln!(s, "time {k}: {v} ms");
            }
        }
        s
    }
}

/// Structural summary of one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub spec: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub normal_indices: Vec<usize>,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub derived_series_orders: Vec<usize>,
    pub lower_central_series_orders: Vec<usize>,
}

impl GroupAnalysis {
    pub fn compute(spec: &str, g: &FiniteGroup) -> Self {
        let class = structure::solvability_class(g);
        GroupAnalysis {
            spec: spec.to_string(),
            order: g.order(),
            class_sizes: g.conjugacy_classes().iter().map(|c| c.len()).collect(),
            normal_indices: structure::normal_index_set(g).into_iter().collect(),
            abelian: class.abelian,
            nilpotent: class.nilpotent,
            solvable: class.solvable,
            derived_series_orders: class.derived_series.iter().map(|m| m.count()).collect(),
            lower_central_series_orders: class
                .lower_central_series
                .iter()
                .map(|m| m.count())
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "group {} (order {})\nconjugacy class sizes: [{}]\nnormal subgroup indices N_G: {{{}}}\nabelian: {}\nnilpotent: {}\nsolvable: {}\nderived series orders: [{}]\nlower central series orders: [{}]\n",
            self.spec,
            self.order,
            join(&self.class_sizes),
            join(&self.normal_indices),
            self.abelian,
            self.nilpotent,
            self.solvable,
            join(&self.derived_series_orders),
            join(&self.lower_central_series_orders),
        )
    }
}
