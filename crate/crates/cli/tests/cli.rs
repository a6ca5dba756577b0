//! End-to-end tests of the command surface: worked-example outputs, exit
//! codes, and JSON round-trips.

use permod_cli::{
    run, BoolOutput, ComplexityOutput, DimOutput, HomDimOutput, LabelOutput, ScottOutput,
    SummandsOutput, ThmBExtOutput, ThmBSymOutput, ThmCOutput,
};

fn exec(args: &[&str]) -> (i32, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut buf = Vec::new();
    let code = run(&args, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn scott_sym_reproduces_the_worked_table() {
    let (code, out) = exec(&["scott", "sym", "--p", "2", "--lambda", "2,1,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("1      1     T'=(0,2)        M1"));
    assert!(out.contains("2      3     T'=(2,1)        M2,M5,M7"));
    assert!(out.contains("3      1     T'=(4)          M3"));
    assert!(out.contains("4      1     D=(0), U=(2)    M6"));

    let (code, out) = exec(&["scott", "ext", "--p", "2", "--lambda", "2,1,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("2      2     T'=(2,1)        M2,M5"));
    assert!(!out.contains("M7"));
}

#[test]
fn projectivity_and_summand_examples() {
    let (code, out) = exec(&["projective", "ext", "--p", "3", "--lambda", "3,2", "--a", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out, "projective: true\n");

    let (code, out) = exec(&["thm-b", "ext", "--p", "3", "--lambda", "3,3,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(5,3)\n");

    let (code, out) = exec(&["thm-b", "ext", "--p", "2", "--lambda", "3,3,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(2^4)\n(4,2^2)\n");

    let (code, out) = exec(&["thm-b", "sym", "--p", "3", "--lambda", "5,4,2", "--a", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("mu = (8,3)"));
    assert!(out.contains("lambda_a = (5,3,0)"));

    let (code, out) = exec(&["dim", "--lambda", "3,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "dim M^(3,2) = 10\n");
}

#[test]
fn deterministic_output() {
    let first = exec(&["scott", "sym", "--p", "2", "--lambda", "3,2,1"]);
    let second = exec(&["scott", "sym", "--p", "2", "--lambda", "3,2,1"]);
    assert_eq!(first, second);
}

#[test]
fn domain_errors_exit_2() {
    // non-prime p
    let (code, out) = exec(&["complexity", "perm", "--p", "4", "--lambda", "2,1"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("prime"));

    // non-partition lambda
    let (code, out) = exec(&["complexity", "perm", "--p", "2", "--lambda", "1,3"]);
    assert_eq!(code, 2);
    assert!(out.contains("non-increasing"));

    // exterior square of a one-row shape
    let (code, out) = exec(&["complexity", "ext-square", "--p", "2", "--lambda", "5"]);
    assert_eq!(code, 2);
    assert!(out.contains("exterior square undefined"));

    // a out of range
    let (code, _) = exec(&["indecomposable", "ext", "--p", "2", "--lambda", "2,1", "--a", "9"]);
    assert_eq!(code, 2);

    // unknown command
    let (code, out) = exec(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(out.contains("usage"));

    // missing required flag
    let (code, out) = exec(&["dim"]);
    assert_eq!(code, 2);
    assert!(out.contains("--lambda"));
}

#[test]
fn resource_errors_exit_3() {
    // the exhaustive exterior-power oracle refuses degrees above the cap
    let (code, out) = exec(&[
        "complexity", "ext-power", "--p", "2", "--lambda", "5,4,1", "--a", "4",
    ]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("cap"));
    // raising --cap would admit it; a lowered cap rejects smaller degrees
    let (code, _) = exec(&[
        "complexity", "ext-power", "--p", "2", "--lambda", "2,1", "--a", "2", "--cap", "2",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn ext_power_oracle_route() {
    let (code, out) = exec(&["complexity", "ext-power", "--p", "2", "--lambda", "2,2", "--a", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle, exponential"));

    // at a = 2 the oracle route agrees with the closed form
    let (_, oracle) = exec(&["complexity", "ext-power", "--p", "2", "--lambda", "2,2", "--a", "2"]);
    let (_, formula) = exec(&["complexity", "ext-square", "--p", "2", "--lambda", "2,2"]);
    assert!(oracle.contains("= 2"));
    assert!(formula.contains("= 2"));
}

#[test]
fn verify_battery_passes_small() {
    let (code, out) = exec(&["verify", "--n-max", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
}

#[test]
fn json_round_trips() {
    let (_, out) = exec(&["dim", "--lambda", "3,2", "--json"]);
    let v: DimOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["complexity", "sym-power", "--p", "2", "--lambda", "5,1", "--a", "4", "--json"]);
    let v: ComplexityOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(v.value, 3);
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["projective", "ext", "--p", "3", "--lambda", "3,2", "--a", "8", "--json"]);
    let v: BoolOutput = serde_json::from_str(&out).unwrap();
    assert!(v.value);

    let (_, out) = exec(&["scott", "sym", "--p", "2", "--lambda", "2,1,1", "--json"]);
    let v: ScottOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(v.classes.len(), 4);
    assert_eq!(v.classes[1].multiplicity, 3);
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["young-summands", "--p", "2", "--lambda", "2,2,2,2", "--json"]);
    let v: SummandsOutput = serde_json::from_str(&out).unwrap();
    assert!(v.summands.len() >= 2);

    let (_, out) = exec(&["thm-b", "sym", "--p", "3", "--lambda", "5,4,2", "--a", "6", "--json"]);
    let v: ThmBSymOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(v.mu, "8,3".parse().unwrap());
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["thm-b", "ext", "--p", "5", "--lambda", "3,3,2", "--json"]);
    let v: ThmBExtOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(v.mus.len(), 2);

    let (_, out) = exec(&["thm-c", "--p", "2", "--lambda", "2,1,1", "--json"]);
    let v: ThmCOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(v.mu, "2,2".parse().unwrap());
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["indecomposable", "ext", "--p", "3", "--lambda", "5,1", "--a", "4", "--json"]);
    let v: LabelOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_value(&v).unwrap(), serde_json::from_str::<serde_json::Value>(&out).unwrap());

    let (_, out) = exec(&["hom-dim", "--p", "2", "--lambda", "2,2", "--json"]);
    let v: HomDimOutput = serde_json::from_str(&out).unwrap();
    assert_eq!((v.sym, v.ext), (3, Some(2)));
}

#[test]
fn indecomposable_labels() {
    let (code, out) = exec(&["indecomposable", "ext", "--p", "2", "--lambda", "3,1", "--a", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "indecomposable: true\nisomorphic to: Young module Y^(2^2)\n");

    let (_, out) = exec(&["indecomposable", "ext", "--p", "3", "--lambda", "4, 2", "--a", "2"]);
    assert_eq!(out, "indecomposable: false\n");

    let (_, out) = exec(&["indecomposable", "sym", "--lambda", "4", "--a", "2"]);
    assert_eq!(out, "indecomposable: true\n");
}

#[test]
fn projective_power_utility() {
    let (code, out) = exec(&["complexity", "projective-power", "--p", "2", "--a", "8", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("= 3"));
    let (_, out) = exec(&["complexity", "projective-power", "--p", "3", "--a", "6", "--r", "5"]);
    assert!(out.contains("= 1"));
}

#[test]
fn hom_dim_examples() {
    let (code, out) = exec(&["hom-dim", "--p", "2", "--lambda", "2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "sym = 6\next = 5\n");
    let (_, out) = exec(&["hom-dim", "--p", "3", "--lambda", "4"]);
    assert!(out.contains("sym = 1"));
    assert!(out.contains("undefined"));
}
