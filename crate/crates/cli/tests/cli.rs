use std::process::{Command, Output};

fn pperim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pperim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn plain(args: &[&str]) -> String {
    let mut all = args.to_vec();
    all.extend(["--format", "plain", "--no-footer"]);
    let o = pperim(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn futang_example() {
    assert_eq!(
        plain(&["map", "--name", "futang", "--partition", "2,1"]),
        "3\n"
    );
    assert_eq!(
        plain(&["map", "--name", "futang", "--inverse", "--partition", "3"]),
        "2,1\n"
    );
}

#[test]
fn series_example() {
    assert_eq!(
        plain(&["series", "--name", "h", "--terms", "8"]),
        "1,1,3,5,10,18,33,59\n"
    );
    assert_eq!(
        plain(&["series", "--name", "g_r", "--r", "3", "--terms", "8"]),
        "1,2,3,5,9,16,28,49\n"
    );
}

#[test]
fn maps_round_trip_through_the_cli() {
    let image = plain(&[
        "map",
        "--name",
        "theorem1",
        "--r",
        "2",
        "--partition",
        "2,2,1,1",
    ]);
    let back = plain(&[
        "map",
        "--name",
        "theorem1",
        "--inverse",
        "--r",
        "2",
        "--partition",
        image.trim(),
    ]);
    assert_eq!(back, "2,2,1,1\n");
    assert_eq!(
        plain(&[
            "map",
            "--name",
            "glaisher",
            "--r",
            "2",
            "--partition",
            "1,1,1"
        ]),
        "2,1\n"
    );
}

#[test]
fn counts() {
    assert_eq!(plain(&["count", "--beck", "5"]), "9,5,4,4\n");
    assert_eq!(plain(&["count", "--franklin", "5", "2", "2"]), "0,0\n");
    assert_eq!(plain(&["count", "--refined", "6", "3", "1"]), "3,3\n");
    assert_eq!(plain(&["count", "--regular", "4", "3"]), "5,6\n");
    let json = stdout(&pperim(&["count", "--perimeter", "5", "--no-footer"]));
    assert!(
        json.contains(r#""t_row":{"5":"5","6":"3","7":"4","8":"3","9":"1"}"#),
        "{json}"
    );
}

#[test]
fn enumerate_and_count_flag() {
    assert_eq!(
        plain(&["enumerate", "--perimeter", "4", "--odd"]),
        "1,1,1,1\n3,1\n3,3\n"
    );
    assert_eq!(
        plain(&["enumerate", "--size", "6", "--div-values", "2,1,2"]),
        "2,2,1,1\n"
    );
    assert_eq!(
        plain(&["enumerate", "--perimeter", "10", "--distinct", "--count"]),
        "55\n"
    );
}

#[test]
fn formulas() {
    assert_eq!(plain(&["formula", "--name", "g", "--m", "8"]), "92\n");
    assert_eq!(plain(&["formula", "--name", "cfib3", "--m", "8"]), "71\n");
    assert_eq!(plain(&["formula", "--name", "fib", "--m", "8"]), "21\n");
    assert_eq!(
        plain(&["formula", "--name", "h", "--m", "9", "--prev2", "33", "--prev1", "59"]),
        "105\n"
    );
}

#[test]
fn profile_and_qpoly() {
    assert_eq!(
        plain(&["profile", "--partition", "6,6,3,2,2,1"]),
        "101001011100\n"
    );
    assert_eq!(
        plain(&["profile", "--word", "101001011100"]),
        "6,6,3,2,2,1\n"
    );
    assert_eq!(plain(&["qpoly", "--m", "5"]), "0,0,0,0,0,5,3,4,3,1\n");
}

#[test]
fn json_is_one_object_per_line_with_string_integers() {
    let o = pperim(&["series", "--name", "g", "--terms", "3", "--no-footer"]);
    assert_eq!(
        stdout(&o),
        "{\"name\":\"g\",\"r\":null,\"d\":null,\"numerator\":\"x-x^3\",\
         \"denominator\":\"1-2x-x^2+2x^3+x^4\",\"coefficients\":[\"1\",\"2\",\"4\"]}\n"
    );
}

#[test]
fn csv_has_header_and_rows() {
    let o = pperim(&[
        "enumerate",
        "--perimeter",
        "3",
        "--format",
        "csv",
        "--no-footer",
    ]);
    assert_eq!(
        stdout(&o),
        "partition,size,length,perimeter\n\"1,1,1\",3,3,3\n\"2,1\",3,2,3\n\"2,2\",4,2,3\n3,3,1,3\n"
    );
}

#[test]
fn footer_is_marked_and_suppressible() {
    let with = stdout(&pperim(&[
        "formula", "--name", "g", "--m", "3", "--format", "plain",
    ]));
    let mut lines = with.lines();
    assert_eq!(lines.next(), Some("4"));
    assert!(lines.all(|l| l.starts_with('#')));
    let without = stdout(&pperim(&[
        "formula",
        "--name",
        "g",
        "--m",
        "3",
        "--format",
        "plain",
        "--no-footer",
    ]));
    assert_eq!(without, "4\n");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["enumerate", "--size", "12", "--no-footer"][..],
        &[
            "count",
            "--perimeter",
            "14",
            "--no-footer",
            "--threads",
            "2",
        ][..],
        &[
            "verify",
            "--suite",
            "perimeter",
            "--m-enum",
            "10",
            "--m-series",
            "60",
            "--no-footer",
        ][..],
        &[
            "conjecture",
            "--r",
            "4",
            "--m-max",
            "80",
            "--margins",
            "--no-footer",
        ][..],
    ] {
        let a = pperim(args);
        let b = pperim(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_all_passes() {
    let o = pperim(&["verify", "--suite", "all", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for check in ["franklin", "theorem1", "beck", "perimeter", "regular"] {
        assert!(out.contains(&format!("{check}: pass")), "{out}");
    }
}

#[test]
fn conjecture_reports_first_gap() {
    let o = pperim(&["conjecture", "--r", "3", "--m-max", "50", "--no-footer"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains(r#""holds":true"#) && out.contains(r#""first_strict_gap":4"#),
        "{out}"
    );
    assert!(out.contains(r#""gap_g":"5","gap_h":"6""#), "{out}");
}

#[test]
fn usage_errors_exit_2_and_name_the_token() {
    let cases: [(&[&str], &str); 5] = [
        (&["map", "--name", "futang", "--partition", "1,1"], "1"),
        (
            &[
                "map",
                "--name",
                "glaisher",
                "--r",
                "2",
                "--partition",
                "2,x",
            ],
            "\"x\"",
        ),
        (&["map", "--name", "glaisher", "--partition", "2"], "--r"),
        (&["series", "--name", "nope"], "nope"),
        (&["enumerate", "--perimeter", "0"], "perimeter 0"),
    ];
    for (args, token) in cases {
        let o = pperim(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(token), "{args:?}: {err}");
    }
}

#[test]
fn library_entry_point_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = perimeter_cli::run(
        [
            "pperim",
            "series",
            "--name",
            "g1",
            "--terms",
            "5",
            "--format",
            "plain",
            "--no-footer",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "0,1,2,5,10\n");
    assert!(err.is_empty());
}
