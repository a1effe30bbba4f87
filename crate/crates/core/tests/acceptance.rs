//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p perimeter-partitions --test acceptance -- --nocapture`
//! to see them. All comparisons are exact; time limits are wall-clock.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use perimeter_partitions::bijections::{fu_tang, fu_tang_inv};
use perimeter_partitions::counting::{beck_totals, perimeter_table, regular_perimeter_counts};
use perimeter_partitions::partitions::{enumerate_by_perimeter, from_profile, to_profile};
use perimeter_partitions::series::{
    closed_form, fib_convolution, gf_catalog, perimeter_q_row, series_coeffs, ClosedFormName,
    ConvolutionName, GfName,
};
use perimeter_partitions::verify::{
    conjecture_scan_with, verify_beck, verify_franklin, verify_perimeter, verify_regular,
    verify_theorem1, VerificationReport,
};
use perimeter_partitions::{fibonacci, m2_index, ConstraintSpec, Partition};

type Outcome = Result<(), String>;

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, limit {limit:?}"))
        }
    });
    match &result {
        Ok(()) => println!("AC{id:02} PASS  {title}  ({elapsed:.2?})"),
        Err(why) => println!("AC{id:02} FAIL  {title}  ({elapsed:.2?}): {why}"),
    }
    if let Err(why) = result {
        panic!("AC{id:02} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(what: &str, left: T, right: T) -> Outcome {
    ensure(left == right, || format!("{what}: {left:?} != {right:?}"))
}

fn report_passed(r: &VerificationReport) -> Outcome {
    ensure(r.passed(), || {
        format!(
            "{} failed {} relation(s); first: {:?}",
            r.check, r.failures, r.counterexample
        )
    })
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn ac01_example_sequence_tables() {
    criterion(
        1,
        "g, h, g1, h1, g-h for M=1..8 by enumeration, formula and series",
        secs(1),
        || {
            let expected: [(&str, [i64; 8]); 5] = [
                ("g", [1, 2, 4, 8, 15, 28, 51, 92]),
                ("h", [1, 1, 3, 5, 10, 18, 33, 59]),
                ("g1", [0, 1, 2, 5, 10, 20, 38, 71]),
                ("h1", [0, 1, 2, 5, 10, 20, 38, 71]),
                ("g-h", [0, 1, 1, 3, 5, 10, 18, 33]),
            ];
            let tables: Vec<_> = (1..=8).map(|m| perimeter_table(m).unwrap()).collect();
            let series = |name| series_coeffs(&gf_catalog(name, None, None).unwrap(), 8);
            for (name, row) in expected {
                let row = ints(&row);
                let enumerated: Vec<BigInt> = tables
                    .iter()
                    .map(|t| match name {
                        "g" => BigInt::from(t.g.clone()),
                        "h" => BigInt::from(t.h.clone()),
                        "g1" => BigInt::from(t.g1.clone()),
                        "h1" => BigInt::from(t.h1.clone()),
                        _ => BigInt::from(t.g.clone()) - BigInt::from(t.h.clone()),
                    })
                    .collect();
                let formula: Vec<BigInt> = (1..=8u64)
                    .map(|m| match name {
                        "g" => closed_form(ClosedFormName::G, m).unwrap(),
                        "h" => closed_form(ClosedFormName::H, m).unwrap(),
                        "g1" => closed_form(ClosedFormName::G1, m).unwrap(),
                        "h1" if m >= 2 => fib_convolution(ConvolutionName::Cfib3, m).unwrap(),
                        "h1" => BigInt::from(0),
                        _ => closed_form(ClosedFormName::IndexSum, m).unwrap(),
                    })
                    .collect();
                let gf = match name {
                    "g" => series(GfName::G),
                    "h" => series(GfName::H),
                    "g1" => series(GfName::G1),
                    "h1" => series(GfName::H1),
                    _ => series(GfName::GMinusH),
                };
                ensure_eq(&format!("{name} enumeration"), &enumerated, &row)?;
                ensure_eq(&format!("{name} formula"), &formula, &row)?;
                ensure_eq(&format!("{name} series"), &gf, &row)?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac02_t_row_for_perimeter_five() {
    criterion(
        2,
        "t_n(5) = 5,3,4,3,1 at n=5..9 by enumeration and q-binomial row",
        secs(1),
        || {
            let expected: BTreeMap<u64, BigUint> = [(5, 5u32), (6, 3), (7, 4), (8, 3), (9, 1)]
                .into_iter()
                .map(|(n, c)| (n, BigUint::from(c)))
                .collect();
            let t = perimeter_table(5).unwrap();
            ensure_eq("enumerated t_row", &t.t_row, &expected)?;
            let row = perimeter_q_row(5).unwrap();
            for n in 0..=20usize {
                let want = expected
                    .get(&(n as u64))
                    .map(|c| BigInt::from(c.clone()))
                    .unwrap_or_default();
                ensure_eq(&format!("q-row coefficient {n}"), row.coeff(n), want)?;
            }
            ensure_eq("sum", row.eval_one(), BigInt::from(16))?;
            ensure_eq(
                "sum",
                t.t_row.values().sum::<BigUint>(),
                BigUint::from(16u32),
            )
        },
    );
}

#[test]
fn ac03_profile_encoding() {
    criterion(
        3,
        "profile of (6,6,3,2,2,1) and exhaustive round trip for M <= 16",
        secs(30),
        || {
            let p: Partition = "6,6,3,2,2,1".parse().unwrap();
            let w = to_profile(&p);
            ensure_eq("profile", w.to_string().as_str(), "101001011100")?;
            ensure_eq("decoded", from_profile(&w), p)?;
            for m in 1..=16u32 {
                let mut seen = 0usize;
                for p in enumerate_by_perimeter(m, &ConstraintSpec::new()).unwrap() {
                    let w = to_profile(&p);
                    ensure(w.len() == m as usize + 1 && from_profile(&w) == p, || {
                        format!("round trip failed for {p}")
                    })?;
                    let again = to_profile(&from_profile(&w.to_string().parse().unwrap()));
                    ensure(again == w, || format!("word {w} did not round trip"))?;
                    seen += 1;
                }
                ensure_eq(&format!("words at M={m}"), seen, 1usize << (m - 1))?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac04_refined_franklin_bijection() {
    criterion(
        4,
        "refined counts and bijection round trip, n <= 25, r in 2..=5",
        secs(60),
        || {
            let r = verify_theorem1(25, &[2, 3, 4, 5]).unwrap();
            report_passed(&r)?;
            // Every (n, r, u) with 1 <= u <= n is a grid point.
            ensure_eq("witnesses", r.witnesses_checked, 4 * (25 * 26 / 2))
        },
    );
}

#[test]
fn ac05_franklin_identity() {
    criterion(
        5,
        "Franklin counts agree and sum to p(n), n <= 35, r in 2..=5, all j",
        secs(60),
        || {
            let r = verify_franklin(35, &[2, 3, 4, 5], 35).unwrap();
            report_passed(&r)
        },
    );
}

#[test]
fn ac06_beck_identity() {
    criterion(
        6,
        "a(n) - b(n) = |O(n;2,1)| = |D(n;2,1)| for n <= 50",
        secs(60),
        || {
            report_passed(&verify_beck(50))?;
            let t = beck_totals(5);
            let four = |v: u32| BigUint::from(v);
            ensure_eq(
                "n=5",
                (t.a, t.b, t.o, t.d),
                (four(9), four(5), four(4), four(4)),
            )
        },
    );
}

#[test]
fn ac07_fixed_perimeter_euler() {
    criterion(
        7,
        "|G(M)| = |H(M)| = F_M and fu_tang bijects H(M) -> G(M), M <= 16",
        secs(30),
        || {
            for m in 1..=16u32 {
                let g: Vec<Partition> = enumerate_by_perimeter(m, &ConstraintSpec::odd())
                    .unwrap()
                    .collect();
                let h: Vec<Partition> = enumerate_by_perimeter(m, &ConstraintSpec::distinct())
                    .unwrap()
                    .collect();
                let f = fibonacci(i64::from(m)).unwrap();
                ensure_eq(&format!("|G({m})|"), BigUint::from(g.len()), f.clone())?;
                ensure_eq(&format!("|H({m})|"), BigUint::from(h.len()), f)?;
                let mut images: Vec<Partition> = h.iter().map(|p| fu_tang(p).unwrap()).collect();
                for (p, img) in h.iter().zip(&images) {
                    ensure(img.all_odd() && img.perimeter() == u64::from(m), || {
                        format!("fu_tang({p}) = {img} is not in G({m})")
                    })?;
                    ensure_eq("inverse", &fu_tang_inv(img).unwrap(), p)?;
                }
                images.sort();
                let mut sorted_g = g.clone();
                sorted_g.sort();
                ensure_eq(&format!("image of H({m})"), images, sorted_g)?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac08_index_sum_and_g_minus_h() {
    criterion(
        8,
        "index sum = g - h = |G1 without 1s| for M <= 16; M=4 witnesses",
        secs(30),
        || {
            for m in 1..=16u32 {
                let t = perimeter_table(m).unwrap();
                let gh = BigInt::from(t.g.clone()) - BigInt::from(t.h.clone());
                ensure_eq(&format!("index sum at M={m}"), &t.index_sum, &gh)?;
                ensure_eq(
                    &format!("G1 without 1s at M={m}"),
                    &BigInt::from(t.g1_no_one),
                    &gh,
                )?;
            }
            let mut witnesses: Vec<(String, i64)> =
                enumerate_by_perimeter(4, &ConstraintSpec::odd())
                    .unwrap()
                    .map(|p| (p.to_string(), m2_index(&p).unwrap()))
                    .collect();
            witnesses.sort();
            ensure_eq(
                "M=4 witnesses",
                witnesses,
                vec![("1,1,1,1".into(), 3), ("3,1".into(), 0), ("3,3".into(), 0)],
            )
        },
    );
}

#[test]
fn ac09_four_way_formula_agreement() {
    criterion(
        9,
        "series = closed form = recurrence = convolution for 2 <= M <= 200",
        secs(5),
        || {
            let r = verify_perimeter(0, 200).unwrap();
            report_passed(&r)?;
            ensure_eq("witnesses", r.witnesses_checked, 199)
        },
    );
}

#[test]
fn ac10_regular_generating_functions() {
    criterion(
        10,
        "h_r, g_r, g_r^(d) series match enumeration (M <= 14, r <= 5); shift; r=2 Fibonacci",
        secs(60),
        || {
            let r = verify_regular(14, &[2, 3, 4, 5], 100).unwrap();
            report_passed(&r)?;
            let h2 = series_coeffs(&gf_catalog(GfName::HR, Some(2), None).unwrap(), 30);
            let g21 = series_coeffs(&gf_catalog(GfName::GRD, Some(2), Some(1)).unwrap(), 30);
            ensure_eq("g_2^(1) = h_2", &g21, &h2)?;
            for (i, v) in h2.iter().enumerate() {
                ensure_eq(
                    "h_2 = F_M",
                    v,
                    &BigInt::from(fibonacci(i as i64 + 1).unwrap()),
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac11_glaisher_fails_at_fixed_perimeter() {
    criterion(
        11,
        "smallest M <= 14 with g_3(M) != h_3(M), with witness counts",
        secs(10),
        || {
            let scan = conjecture_scan_with(3, 14, 14).unwrap();
            let gap = scan.first_strict_gap.ok_or("no gap found within M <= 14")?;
            ensure(gap <= 14, || format!("gap at {gap}"))?;
            ensure_eq("first gap", gap, 4)?;
            let (g, h) = scan.gap_counts.clone().ok_or("missing witness counts")?;
            let direct = regular_perimeter_counts(gap, 3, None).unwrap();
            ensure_eq("witness g_3", g, BigInt::from(direct.g_r))?;
            ensure_eq("witness h_3", h, BigInt::from(direct.h_r))?;
            ensure_eq("cross-check", scan.cross_check_mismatch, None)?;
            for m in 1..gap {
                let c = regular_perimeter_counts(m, 3, None).unwrap();
                ensure_eq(&format!("no earlier gap at {m}"), c.g_r, c.h_r)?;
            }
            Ok(())
        },
    );
}

#[test]
fn ac12_conjecture_scan() {
    criterion(
        12,
        "g_r(M) <= h_r(M) for r <= 8, M <= 500; enumeration cross-check M <= 14",
        secs(10),
        || {
            for r in 2..=8u64 {
                let scan = conjecture_scan_with(r, 500, 14).unwrap();
                ensure_eq(&format!("violation for r={r}"), scan.first_violation, None)?;
                ensure_eq(
                    &format!("cross-check bound r={r}"),
                    scan.cross_checked_through,
                    14,
                )?;
                ensure_eq(
                    &format!("cross-check r={r}"),
                    scan.cross_check_mismatch,
                    None,
                )?;
                ensure_eq("margins", scan.margins.len(), 500)?;
            }
            Ok(())
        },
    );
}
