//! Identity checks between independent computation routes, and the scan of
//! `g_r(M) <= h_r(M)`.
//!
//! A check never stops at the first mismatch: it keeps the first
//! counterexample in grid order and counts every failure. Grid points run in
//! parallel, but observations are merged in grid order, so a report depends
//! only on its grid.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Display;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{fu_tang, fu_tang_inv, theorem1_inv, theorem1_map};
use crate::counting::{
    beck_totals, franklin_histogram, partition_count, perimeter_table, regular_perimeter_counts,
    EXHAUSTIVE_PERIMETER_BOUND,
};
use crate::partitions::{
    enumerate_by_perimeter, fibonacci, Constraint, ConstraintSpec, PartitionsOfSize,
};
use crate::series::{
    closed_form, fib_convolution, gf_catalog, perimeter_q_row, recurrence_sequence, series_coeffs,
    ClosedFormName, ConvolutionName, GfName, RecurrenceName,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first mismatch found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Grid coordinates of the failing point.
    pub point: BTreeMap<String, i64>,
    /// The relation that failed, e.g. `"g: enumeration = series"`.
    pub relation: String,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    /// Grid parameters, echoed back.
    pub grid: BTreeMap<String, String>,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    /// Number of failing relations over the whole grid.
    pub failures: u64,
    /// Number of grid points evaluated.
    pub witnesses_checked: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug)]
struct Relation {
    name: String,
    left: String,
    right: String,
    holds: bool,
    detail: Option<String>,
}

/// All relations evaluated at one grid point.
#[derive(Clone, Debug, Default)]
struct Observation {
    point: Vec<(&'static str, i64)>,
    relations: Vec<Relation>,
}

impl Observation {
    fn at(point: &[(&'static str, i64)]) -> Self {
        Observation {
            point: point.to_vec(),
            relations: Vec::new(),
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, left: T, right: T) {
        let holds = left == right;
        self.relations.push(Relation {
            name: name.into(),
            left: left.to_string(),
            right: right.to_string(),
            holds,
            detail: None,
        });
    }

    fn eq_detail<T: PartialEq + Display>(
        &mut self,
        name: impl Into<String>,
        left: T,
        right: T,
        detail: Option<String>,
    ) {
        self.eq(name, left, right);
        if let Some(last) = self.relations.last_mut() {
            if !last.holds {
                last.detail = detail;
            }
        }
    }

    /// Every route in `routes` must agree with the first one.
    fn chain<T: PartialEq + Display>(&mut self, quantity: &str, routes: &[(&str, T)]) {
        let Some((base_label, base)) = routes.first() else {
            return;
        };
        for (label, value) in &routes[1..] {
            self.eq(format!("{quantity}: {base_label} = {label}"), base, value);
        }
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool, left: String, right: String) {
        self.relations.push(Relation {
            name: name.into(),
            left,
            right,
            holds: ok,
            detail: None,
        });
    }
}

struct ReportBuilder {
    check: String,
    grid: BTreeMap<String, String>,
    counterexample: Option<Counterexample>,
    failures: u64,
    witnesses: u64,
    start: Instant,
}

impl ReportBuilder {
    fn new(check: &str, grid: &[(&str, String)]) -> Self {
        ReportBuilder {
            check: check.into(),
            grid: grid
                .iter()
                .map(|(k, v)| ((*k).to_string(), v.clone()))
                .collect(),
            counterexample: None,
            failures: 0,
            witnesses: 0,
            start: Instant::now(),
        }
    }

    fn ingest(&mut self, obs: Observation) {
        self.witnesses += 1;
        for rel in obs.relations {
            if rel.holds {
                continue;
            }
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(Counterexample {
                    point: obs.point.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
                    relation: rel.name,
                    left: rel.left,
                    right: rel.right,
                    detail: rel.detail,
                });
            }
        }
    }

    fn ingest_all(&mut self, observations: impl IntoIterator<Item = Observation>) {
        for obs in observations {
            self.ingest(obs);
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check,
            grid: self.grid,
            status: if self.counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            counterexample: self.counterexample,
            failures: self.failures,
            witnesses_checked: self.witnesses,
            elapsed: self.start.elapsed(),
        }
    }
}

fn join<T: Display>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check_r_set(r_set: &[u64]) -> Result<()> {
    if let Some(&r) = r_set.iter().find(|&&r| r < 2) {
        return Err(Error::Parameter(format!("r = {r} must be at least 2")));
    }
    Ok(())
}

/// `|O(n;r,j)| = |D(n;r,j)|` over the grid, plus `Σ_j |O(n;r,j)| = p(n)`
/// against the pentagonal recurrence at each `j = 0` point.
pub fn verify_franklin(n_max: u64, r_set: &[u64], j_max: usize) -> Result<VerificationReport> {
    check_r_set(r_set)?;
    let mut report = ReportBuilder::new(
        "franklin",
        &[
            ("n_max", n_max.to_string()),
            ("r_set", join(r_set)),
            ("j_max", j_max.to_string()),
        ],
    );
    let points: Vec<(u64, u64)> = (0..=n_max)
        .flat_map(|n| r_set.iter().map(move |&r| (n, r)))
        .collect();
    let observations: Vec<Vec<Observation>> = points
        .par_iter()
        .map(|&(n, r)| {
            let hist = franklin_histogram(n, r).expect("r validated");
            let total: BigUint = hist.divisible.iter().sum();
            (0..=j_max)
                .map(|j| {
                    let mut obs =
                        Observation::at(&[("n", n as i64), ("r", r as i64), ("j", j as i64)]);
                    obs.eq(
                        "|O(n;r,j)| = |D(n;r,j)|",
                        hist.divisible_at(j),
                        hist.repeated_at(j),
                    );
                    if j == 0 {
                        obs.eq("sum_j |O(n;r,j)| = p(n)", total.clone(), partition_count(n));
                    }
                    obs
                })
                .collect()
        })
        .collect();
    report.ingest_all(observations.into_iter().flatten());
    Ok(report.finish())
}

/// Refined counts agree and the refined Franklin map is a class-correct,
/// injective bijection inverted by its inverse, for every `(n, r, u)`.
pub fn verify_theorem1(n_max: u64, r_set: &[u64]) -> Result<VerificationReport> {
    check_r_set(r_set)?;
    let mut report = ReportBuilder::new(
        "theorem1",
        &[("n_max", n_max.to_string()), ("r_set", join(r_set))],
    );
    let points: Vec<(u64, u64)> = (0..=n_max)
        .flat_map(|n| r_set.iter().map(move |&r| (n, r)))
        .collect();
    let observations: Vec<Vec<Observation>> = points
        .par_iter()
        .map(|&(n, r)| theorem1_point(n, r))
        .collect();
    report.ingest_all(observations.into_iter().flatten());
    Ok(report.finish())
}

fn theorem1_point(n: u64, r: u64) -> Vec<Observation> {
    let mut alpha: Vec<Vec<_>> = vec![Vec::new(); n as usize + 1];
    let mut beta: Vec<Vec<_>> = vec![Vec::new(); n as usize + 1];
    for p in PartitionsOfSize::new(n) {
        let runs = p.runs();
        let divisible: Vec<_> = runs.iter().filter(|(v, _)| v % r == 0).collect();
        if let [&(_, u)] = divisible.as_slice() {
            alpha[u].push(p.clone());
        }
        let heavy: Vec<_> = runs.iter().filter(|&&(_, m)| m as u64 >= r).collect();
        if let [&(u, _)] = heavy.as_slice() {
            beta[u as usize].push(p);
        }
    }
    (1..=n)
        .map(|u| {
            let mut obs = Observation::at(&[("n", n as i64), ("r", r as i64), ("u", u as i64)]);
            let dom = &alpha[u as usize];
            let cod = &beta[u as usize];
            obs.eq("alpha_u(n) = beta_u(n)", dom.len(), cod.len());

            let d_u = ConstraintSpec::from_constraints([
                Constraint::SizeEquals(n),
                Constraint::RepeatedValues {
                    r,
                    j: 1,
                    u: Some(u),
                },
            ])
            .expect("valid constraint");
            let o_u = ConstraintSpec::from_constraints([
                Constraint::SizeEquals(n),
                Constraint::DivisibleValues {
                    r,
                    j: 1,
                    u: Some(u as usize),
                },
            ])
            .expect("valid constraint");

            let (mut in_class, mut round_trip, mut first_bad) = (0usize, 0usize, None);
            let mut images = HashSet::new();
            for p in dom {
                match theorem1_map(p, r) {
                    Ok(img) => {
                        let ok_class = d_u.matches(&img);
                        let ok_back = theorem1_inv(&img, r).as_ref() == Ok(p);
                        in_class += usize::from(ok_class);
                        round_trip += usize::from(ok_back);
                        if (!ok_class || !ok_back) && first_bad.is_none() {
                            first_bad = Some(format!("theorem1_map({p}) = {img}"));
                        }
                        images.insert(img);
                    }
                    Err(e) => {
                        first_bad.get_or_insert_with(|| format!("theorem1_map({p}): {e}"));
                    }
                }
            }
            obs.eq_detail(
                "theorem1_map(O_u) lies in D_u",
                in_class,
                dom.len(),
                first_bad.clone(),
            );
            obs.eq_detail("theorem1_map is injective", images.len(), dom.len(), None);
            obs.eq_detail(
                "theorem1_inv . theorem1_map = id",
                round_trip,
                dom.len(),
                first_bad,
            );

            let (mut back_ok, mut first_bad) = (0usize, None);
            for p in cod {
                let ok = theorem1_inv(p, r)
                    .ok()
                    .filter(|pre| o_u.matches(pre))
                    .is_some_and(|pre| theorem1_map(&pre, r).as_ref() == Ok(p));
                back_ok += usize::from(ok);
                if !ok && first_bad.is_none() {
                    first_bad = Some(format!("theorem1_inv({p}) does not return into O_u"));
                }
            }
            obs.eq_detail(
                "theorem1_map . theorem1_inv = id",
                back_ok,
                cod.len(),
                first_bad,
            );
            obs
        })
        .collect()
}

/// `a(n) − b(n) = |O(n;2,1)| = |D(n;2,1)|` for every `n ≤ n_max`.
pub fn verify_beck(n_max: u64) -> VerificationReport {
    let mut report = ReportBuilder::new("beck", &[("n_max", n_max.to_string())]);
    let observations: Vec<Observation> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let t = beck_totals(n);
            let mut obs = Observation::at(&[("n", n as i64)]);
            let excess = BigInt::from(t.a.clone()) - BigInt::from(t.b.clone());
            obs.eq(
                "a(n) - b(n) = |O(n;2,1)|",
                excess,
                BigInt::from(t.o.clone()),
            );
            obs.eq("|O(n;2,1)| = |D(n;2,1)|", t.o, t.d);
            obs
        })
        .collect();
    report.ingest_all(observations);
    report.finish()
}

/// Coefficient tables for the perimeter sequences, index `M` (entry 0 unused).
struct SeriesTables {
    series: BTreeMap<&'static str, Vec<BigInt>>,
    recurrence: BTreeMap<&'static str, Vec<BigInt>>,
}

impl SeriesTables {
    fn build(max: usize) -> Self {
        let mut series = BTreeMap::new();
        for name in [
            GfName::G,
            GfName::H,
            GfName::G1,
            GfName::H1,
            GfName::GMinusH,
        ] {
            let s = gf_catalog(name, None, None).expect("fixed catalog entries");
            let mut c = vec![BigInt::zero()];
            c.extend(series_coeffs(&s, max));
            series.insert(name.as_str(), c);
        }
        let mut recurrence = BTreeMap::new();
        for name in RecurrenceName::ALL {
            let mut c = vec![BigInt::zero()];
            c.extend(recurrence_sequence(*name, max));
            recurrence.insert(name.as_str(), c);
        }
        SeriesTables { series, recurrence }
    }

    fn s(&self, name: &str, m: u64) -> &BigInt {
        &self.series[name][m as usize]
    }

    fn rec(&self, name: &str, m: u64) -> &BigInt {
        &self.recurrence[name][m as usize]
    }
}

fn formula_routes(
    obs: &mut Observation,
    tables: &SeriesTables,
    m: u64,
    enumerated: Option<&crate::counting::PerimeterTable>,
) {
    let closed = |name| closed_form(name, m).expect("m >= 1");
    let conv = |name| fib_convolution(name, m).ok();
    let quantities: [(&str, Option<ClosedFormName>, Option<ConvolutionName>); 4] = [
        ("g", Some(ClosedFormName::G), Some(ConvolutionName::Cfib1)),
        ("h", Some(ClosedFormName::H), Some(ConvolutionName::Cfib2)),
        ("g1", Some(ClosedFormName::G1), Some(ConvolutionName::Cfib3)),
        ("h1", None, Some(ConvolutionName::Cfib3)),
    ];
    for (name, cf, cv) in quantities {
        let mut routes: Vec<(&str, BigInt)> = Vec::new();
        if let Some(t) = enumerated {
            let v = match name {
                "g" => &t.g,
                "h" => &t.h,
                "g1" => &t.g1,
                _ => &t.h1,
            };
            routes.push(("enumeration", BigInt::from(v.clone())));
        }
        routes.push(("series", tables.s(name, m).clone()));
        routes.push(("recurrence", tables.rec(name, m).clone()));
        if let Some(cf) = cf {
            routes.push(("closed form", closed(cf)));
        }
        if let Some(v) = cv.and_then(conv) {
            routes.push(("convolution", v));
        }
        obs.chain(name, &routes);
    }

    let g_minus_h = tables.s("g", m) - tables.s("h", m);
    let g1_step = tables.s("g1", m)
        - if m >= 1 {
            tables.s("g1", m - 1).clone()
        } else {
            BigInt::zero()
        };
    let h1_step = tables.s("h1", m) - tables.s("h1", m - 1);
    let mut routes: Vec<(&str, BigInt)> = Vec::new();
    if let Some(t) = enumerated {
        routes.push((
            "enumerated g-h",
            BigInt::from(t.g.clone()) - BigInt::from(t.h.clone()),
        ));
        routes.push(("index sum", t.index_sum.clone()));
        routes.push(("G1 without 1s", BigInt::from(t.g1_no_one.clone())));
    }
    routes.push(("series g_minus_h", tables.s("g_minus_h", m).clone()));
    routes.push(("series g - series h", g_minus_h));
    routes.push(("g1(M) - g1(M-1)", g1_step));
    routes.push(("h1(M) - h1(M-1)", h1_step));
    routes.push(("closed index_sum", closed(ClosedFormName::IndexSum)));
    if let Some(v) = conv(ConvolutionName::Cfib4) {
        routes.push(("convolution", v));
    }
    obs.chain("g-h", &routes);
}

fn fu_tang_routes(obs: &mut Observation, m: u32) {
    let odd = ConstraintSpec::odd();
    let distinct = ConstraintSpec::distinct();
    let domain: Vec<_> = enumerate_by_perimeter(m, &distinct)
        .expect("m in range")
        .collect();
    let codomain: Vec<_> = enumerate_by_perimeter(m, &odd)
        .expect("m in range")
        .collect();
    let (mut good, mut first_bad) = (0usize, None);
    let mut images = HashSet::new();
    for p in &domain {
        let ok = match fu_tang(p) {
            Ok(img) => {
                let ok = img.all_odd()
                    && img.perimeter() == u64::from(m)
                    && fu_tang_inv(&img).as_ref() == Ok(p);
                if !ok && first_bad.is_none() {
                    first_bad = Some(format!("fu_tang({p}) = {img}"));
                }
                images.insert(img);
                ok
            }
            Err(e) => {
                first_bad.get_or_insert_with(|| format!("fu_tang({p}): {e}"));
                false
            }
        };
        good += usize::from(ok);
    }
    obs.eq_detail(
        "fu_tang maps H(M) into G(M) and inverts",
        good,
        domain.len(),
        first_bad,
    );
    obs.eq("fu_tang is injective", images.len(), domain.len());
    obs.eq("fu_tang images cover G(M)", images.len(), codomain.len());
    let back = codomain
        .iter()
        .filter(|p| {
            fu_tang_inv(p)
                .ok()
                .filter(|pre| pre.all_distinct() && pre.perimeter() == u64::from(m))
                .is_some_and(|pre| fu_tang(&pre).as_ref() == Ok(*p))
        })
        .count();
    obs.eq("fu_tang . fu_tang_inv = id on G(M)", back, codomain.len());
}

/// Enumeration against series, closed forms, recurrences and convolutions
/// for `M ≤ m_enum`; formula-only agreement for `2 ≤ M ≤ m_series`.
pub fn verify_perimeter(m_enum: u32, m_series: u32) -> Result<VerificationReport> {
    if m_enum > EXHAUSTIVE_PERIMETER_BOUND {
        return Err(Error::Parameter(format!(
            "enumeration bound {m_enum} exceeds {EXHAUSTIVE_PERIMETER_BOUND}"
        )));
    }
    let mut report = ReportBuilder::new(
        "perimeter",
        &[
            ("m_enum", m_enum.to_string()),
            ("m_series", m_series.to_string()),
        ],
    );
    let tables = SeriesTables::build(m_enum.max(m_series) as usize);

    let enumerated: Vec<Observation> = (1..=m_enum)
        .into_par_iter()
        .map(|m| {
            let mut obs = Observation::at(&[("M", i64::from(m))]);
            let t = perimeter_table(m).expect("m in range");
            formula_routes(&mut obs, &tables, u64::from(m), Some(&t));
            obs.eq("g1 = h1", &t.g1, &t.h1);
            let fib = fibonacci(i64::from(m)).expect("m >= 1");
            obs.eq("|G(M)| = F_M", &t.odd_count, &fib);
            obs.eq("|H(M)| = F_M", &t.distinct_count, &fib);
            obs.holds(
                "index sum >= 0",
                !t.index_sum.is_negative(),
                t.index_sum.to_string(),
                ">= 0".into(),
            );
            let total: BigUint = t.t_row.values().sum();
            obs.eq(
                "sum_n t_n(M) = 2^(M-1)",
                total,
                BigUint::from(1u8) << (m - 1),
            );
            let row = perimeter_q_row(u64::from(m)).expect("m >= 1");
            let q_row: BTreeMap<u64, BigUint> = row
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (n as u64, c.to_biguint().expect("counts are non-negative")))
                .collect();
            obs.eq(
                "t_n(M): enumeration = q-binomial row",
                format!("{:?}", t.t_row),
                format!("{q_row:?}"),
            );
            fu_tang_routes(&mut obs, m);
            obs
        })
        .collect();
    report.ingest_all(enumerated);

    let formulas: Vec<Observation> = (2..=u64::from(m_series))
        .into_par_iter()
        .map(|m| {
            let mut obs = Observation::at(&[("M", m as i64)]);
            formula_routes(&mut obs, &tables, m, None);
            obs
        })
        .collect();
    report.ingest_all(formulas);
    Ok(report.finish())
}

/// The fixed-perimeter generating functions for `h_r`, `g_r` and
/// `g_r^{(d)}` against enumeration, the shift `g_r^{(d)}(M) = g_r^{(d−1)}(M−1)`
/// for `d ≥ 2`, and the `r = 2` reduction to Fibonacci numbers.
pub fn verify_regular(m_enum: u32, r_set: &[u64], m_series: u32) -> Result<VerificationReport> {
    check_r_set(r_set)?;
    if m_enum > EXHAUSTIVE_PERIMETER_BOUND {
        return Err(Error::Parameter(format!(
            "enumeration bound {m_enum} exceeds {EXHAUSTIVE_PERIMETER_BOUND}"
        )));
    }
    let mut report = ReportBuilder::new(
        "regular",
        &[
            ("m_enum", m_enum.to_string()),
            ("r_set", join(r_set)),
            ("m_series", m_series.to_string()),
        ],
    );
    let len = m_enum.max(m_series) as usize;
    let with_zero = |s| {
        let mut c = vec![BigInt::zero()];
        c.extend(series_coeffs(&s, len));
        c
    };
    for &r in r_set {
        let h_r = with_zero(gf_catalog(GfName::HR, Some(r), None)?);
        let g_r = with_zero(gf_catalog(GfName::GR, Some(r), None)?);
        let g_rd: Vec<Vec<BigInt>> = (1..r)
            .map(|d| gf_catalog(GfName::GRD, Some(r), Some(d)).map(with_zero))
            .collect::<Result<_>>()?;
        let observations: Vec<Observation> = (1..=m_enum)
            .into_par_iter()
            .map(|m| {
                let mut obs = Observation::at(&[("r", r as i64), ("M", i64::from(m))]);
                let idx = m as usize;
                let base = regular_perimeter_counts(m, r, None).expect("validated");
                obs.eq(
                    "h_r: enumeration = series",
                    BigInt::from(base.h_r),
                    h_r[idx].clone(),
                );
                obs.eq(
                    "g_r: enumeration = series",
                    BigInt::from(base.g_r),
                    g_r[idx].clone(),
                );
                for d in 1..r {
                    let c = regular_perimeter_counts(m, r, Some(d)).expect("validated");
                    obs.eq(
                        format!("g_r^({d}): enumeration = series"),
                        BigInt::from(c.g_r_d.expect("d given")),
                        g_rd[d as usize - 1][idx].clone(),
                    );
                }
                obs
            })
            .collect();
        report.ingest_all(observations);

        for m in 1..=m_series as usize {
            let mut obs = Observation::at(&[("r", r as i64), ("M", m as i64)]);
            for d in 2..r as usize {
                obs.eq(
                    format!("g_r^({d})(M) = g_r^({})(M-1)", d - 1),
                    &g_rd[d - 1][m],
                    &g_rd[d - 2][m - 1],
                );
            }
            if r == 2 {
                let fib = BigInt::from(fibonacci(m as i64).expect("m >= 1"));
                obs.eq("g_2^(1)(M) = h_2(M)", &g_rd[0][m], &h_r[m]);
                obs.eq("h_2(M) = F_M", &h_r[m], &fib);
            }
            report.ingest(obs);
        }
    }
    Ok(report.finish())
}

/// Margins `h_r(M) − g_r(M)` for `1 ≤ M ≤ m_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureScan {
    pub r: u64,
    pub m_max: u32,
    /// Entry `i` is the margin at `M = i + 1`.
    pub margins: Vec<BigInt>,
    /// Smallest `M` with `g_r(M) > h_r(M)`.
    pub first_violation: Option<u32>,
    /// Smallest `M` with `g_r(M) ≠ h_r(M)`.
    pub first_strict_gap: Option<u32>,
    /// `(g_r, h_r)` at the first strict gap.
    pub gap_counts: Option<(BigInt, BigInt)>,
    /// Enumeration was compared with the series for `M` up to this bound.
    pub cross_checked_through: u32,
    /// Smallest `M` where enumeration and series disagree.
    pub cross_check_mismatch: Option<u32>,
}

/// Scans with the default enumeration cross-check bound of 16.
pub fn conjecture_scan(r: u64, m_max: u32) -> Result<ConjectureScan> {
    conjecture_scan_with(r, m_max, 16)
}

pub fn conjecture_scan_with(r: u64, m_max: u32, enum_max: u32) -> Result<ConjectureScan> {
    let h = series_coeffs(&gf_catalog(GfName::HR, Some(r), None)?, m_max as usize);
    let g = series_coeffs(&gf_catalog(GfName::GR, Some(r), None)?, m_max as usize);
    let margins: Vec<BigInt> = h.iter().zip(&g).map(|(h, g)| h - g).collect();
    let first =
        |pred: &dyn Fn(&BigInt) -> bool| margins.iter().position(pred).map(|i| i as u32 + 1);
    let first_violation = first(&|m: &BigInt| m.is_negative());
    let first_strict_gap = first(&|m: &BigInt| !m.is_zero());
    let gap_counts =
        first_strict_gap.map(|m| (g[m as usize - 1].clone(), h[m as usize - 1].clone()));

    let cross = enum_max.min(m_max).min(EXHAUSTIVE_PERIMETER_BOUND);
    let mismatches: Vec<bool> = (1..=cross)
        .into_par_iter()
        .map(|m| {
            let c = regular_perimeter_counts(m, r, None).expect("validated");
            let i = m as usize - 1;
            BigInt::from(c.g_r) != g[i] || BigInt::from(c.h_r) != h[i]
        })
        .collect();
    let cross_check_mismatch = mismatches.iter().position(|&b| b).map(|i| i as u32 + 1);

    Ok(ConjectureScan {
        r,
        m_max,
        margins,
        first_violation,
        first_strict_gap,
        gap_counts,
        cross_checked_through: cross,
        cross_check_mismatch,
    })
}

/// Default grids.
pub mod defaults {
    pub const FRANKLIN_N_MAX: u64 = 35;
    pub const THEOREM1_N_MAX: u64 = 25;
    pub const BECK_N_MAX: u64 = 50;
    pub const R_SET: [u64; 4] = [2, 3, 4, 5];
    pub const J_MAX: usize = 6;
    pub const M_ENUM: u32 = 16;
    pub const M_SERIES: u32 = 200;
    pub const REGULAR_M_ENUM: u32 = 14;
    pub const REGULAR_M_SERIES: u32 = 100;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn franklin_trivial_grid() {
        let r = verify_franklin(0, &[2], 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses_checked, 1);
        assert_eq!(r.grid["r_set"], "2");
    }

    #[test]
    fn theorem1_small_grids() {
        let r = verify_theorem1(1, &[2]).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses_checked, 1);
        let r = verify_theorem1(3, &[2]).unwrap();
        assert!(r.passed(), "{:?}", r.counterexample);
    }

    #[test]
    fn beck_small() {
        let r = verify_beck(0);
        assert!(r.passed());
        assert_eq!(r.witnesses_checked, 1);
        assert!(verify_beck(5).passed());
    }

    #[test]
    fn perimeter_small() {
        let r = verify_perimeter(5, 8).unwrap();
        assert!(r.passed(), "{:?}", r.counterexample);
        let r = verify_perimeter(4, 4).unwrap();
        assert!(r.passed(), "{:?}", r.counterexample);
        assert!(verify_perimeter(EXHAUSTIVE_PERIMETER_BOUND + 1, 4).is_err());
    }

    #[test]
    fn failing_observation_is_recorded_once_with_count() {
        let mut b = ReportBuilder::new("demo", &[]);
        let mut obs = Observation::at(&[("n", 3)]);
        obs.eq("x = y", 1, 2);
        obs.eq("y = z", 2, 2);
        b.ingest(obs);
        let mut obs = Observation::at(&[("n", 4)]);
        obs.eq("x = y", 5, 6);
        b.ingest(obs);
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures, 2);
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.point["n"], 3);
        assert_eq!((ce.left.as_str(), ce.right.as_str()), ("1", "2"));
    }

    #[test]
    fn scan_r2_has_no_gap() {
        let s = conjecture_scan(2, 40).unwrap();
        assert!(s.margins.iter().all(Zero::is_zero));
        assert_eq!(s.first_strict_gap, None);
        assert_eq!(s.cross_check_mismatch, None);
        assert_eq!(s.cross_checked_through, 16);
    }
}
