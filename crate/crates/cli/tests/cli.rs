use num_traits::ToPrimitive;
use serde_json::Value;

use qcurv::{run, sample_points, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use qcurv_core::algebra::parse_rational;
use qcurv_core::catalog::{hopf_data, FamilyId, HopfFamily};
use qcurv_core::geometry::curvature_package;

fn qcurv(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qcurv").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = qcurv(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn curvature_of_the_round_seven_sphere() {
    let v = json(&["curvature", "--family", "ii", "--q", "1", "--at", "1"]);
    assert_eq!(v["at"]["scal"], "42");
    assert_eq!(v["at"]["Q"], "315/8");
    assert_eq!(v["package"]["scal"], serde_json::json!({"-1": "6", "0": "48", "1": "-12"}));
    assert_eq!(v["data"]["lamB"], "12");
}

#[test]
fn custom_data_matches_named_family() {
    let named = json(&["curvature", "--family", "ii", "--q", "1"]);
    let custom = json(&["curvature", "--custom", "n=7,l=3,zeta=3,eta=4,lamF=2,lamB=12"]);
    assert_eq!(named, custom);
}

#[test]
fn theorem_a_table() {
    let (code, out, err) = qcurv(&["theorem-a", "--q-max", "12"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let row_i = out.lines().find(|l| l.starts_with("| (i) ")).unwrap();
    assert!(row_i.ends_with("| no | if q ≥ 6 |"), "{row_i}");
    assert!(err.is_empty());

    let rows = json(&["theorem-a", "--q-max", "12", "--json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11 + 12 + 12 + 1);
    assert!(rows.iter().all(|r| r["matches"] == true));
}

#[test]
fn verify_appendix_passes() {
    let v = json(&["verify-appendix", "--q-max", "50"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["mismatches"], serde_json::json!([]));
}

#[test]
fn asymptotic_verdicts() {
    let v = json(&["asymptotics", "--family", "iv"]);
    assert_eq!(v["collapse"]["result"], true);
    assert_eq!(v["expansion"]["result"], true);
    let v = json(&["asymptotics", "--family", "i", "--q", "5"]);
    assert_eq!(v["collapse"], serde_json::json!({"result": false, "method": "negative"}));
    assert_eq!(v["expansion"], serde_json::json!({"result": false, "method": "direct"}));
}

#[test]
fn instants_for_single_eigenvalue() {
    let v = json(&["instants", "--family", "ii", "--q", "1", "--lambda", "16"]);
    let r = &v.as_array().unwrap()[0];
    assert_eq!(r["poly"], serde_json::json!([-51, -1568, 19084, -2240, 2100]));
    assert_eq!(r["transversal"], true);
    assert_eq!(r["scalar_distinct"], true);
    let lo = parse_rational(r["interval"][0].as_str().unwrap()).unwrap();
    let hi = parse_rational(r["interval"][1].as_str().unwrap()).unwrap();
    assert!(lo <= hi && lo.to_f64().unwrap() < 0.1082 && hi.to_f64().unwrap() > 0.1081);
}

#[test]
fn instants_with_window_and_custom_spectrum() {
    let named = json(&["instants", "--family", "ii", "--q", "1", "--eigs", "12", "--window", "0:1/10"]);
    let custom = json(&[
        "instants",
        "--custom",
        "n=7,l=3,zeta=3,eta=4,lamF=2,lamB=12",
        "--eigs",
        "12",
        "--window",
        "0:1/10",
        "--spectrum",
        "4:3",
    ]);
    assert_eq!(named, custom);
    assert!(!named.as_array().unwrap().is_empty());

    let all = json(&["instants", "--family", "iv", "--eigs", "10", "--window", "100:inf"]);
    for r in all.as_array().unwrap() {
        let lo = parse_rational(r["interval"][0].as_str().unwrap()).unwrap();
        assert!(lo.to_f64().unwrap() >= 50.0);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["theorem-a", "--q-max", "8", "--json"][..],
        &["instants", "--family", "iii", "--q", "2", "--eigs", "15"][..],
        &["curvature", "--family", "i", "--q", "3", "--at", "7/3"][..],
    ] {
        assert_eq!(qcurv(args), qcurv(args));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["curvature", "--family", "ii", "--at", "0.5"][..],
        &["curvature", "--family", "i", "--q", "1"][..],
        &["curvature", "--family", "ii", "--custom", "n=7,l=3,zeta=3,eta=4,lamF=2,lamB=12"][..],
        &["curvature", "--custom", "n=7,l=3,zeta=3,eta=5,lamF=2,lamB=12"][..],
        &["curvature"][..],
        &["instants", "--family", "ii", "--lambda", "16", "--eigs", "3"][..],
        &["instants", "--family", "ii", "--lambda", "0"][..],
        &["instants", "--custom", "n=7,l=3,zeta=3,eta=4,lamF=2,lamB=12", "--eigs", "3"][..],
        &["sample", "--family", "ii", "--t-range", "0:1", "--steps", "3", "--out", "/dev/null"][..],
        &["frobnicate"][..],
    ] {
        let (code, _, err) = qcurv(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = qcurv(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("theorem-a"));
}

#[test]
fn sample_csv_agrees_with_exact_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let (code, _, err) = qcurv(&[
        "sample",
        "--family",
        "iii",
        "--q",
        "2",
        "--t-range",
        "1/50:7",
        "--steps",
        "41",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,scal,Q,alpha,beta,discriminant");

    let pkg = curvature_package(&hopf_data(&HopfFamily::new(FamilyId::III, 2).unwrap())).unwrap();
    let cols = [pkg.scal.clone(), pkg.q_curv.clone(), pkg.alpha.clone(), pkg.beta.clone(), pkg.discriminant()];
    let ts = sample_points(&parse_rational("1/50").unwrap(), &parse_rational("7").unwrap(), 41);
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), ts.len());
    for (row, t) in rows.iter().zip(&ts) {
        let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 6);
        assert!((fields[0] - t.to_f64().unwrap()).abs() <= 1e-15 * fields[0].abs());
        for (x, p) in fields[1..].iter().zip(&cols) {
            let exact = p.eval(t).unwrap().to_f64().unwrap();
            assert!((x - exact).abs() <= 1e-9 * exact.abs().max(f64::MIN_POSITIVE), "{x} vs {exact}");
        }
        // 17 significant digits
        for f in row.split(',') {
            let mantissa = f.split('e').next().unwrap().trim_start_matches('-');
            assert_eq!(mantissa.replace('.', "").len(), 17, "{f}");
        }
    }
}
