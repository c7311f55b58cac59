use cellchar_cli::run;
use serde_json::Value;

fn call(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cellchar").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &str) -> Value {
    let (code, out, err) = call(&format!("{args} --format json"));
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn check_equal_sets_exits_zero() {
    let (code, out, _) = call("check --r 1,0 --n 2 --c0 1");
    assert_eq!(code, 0);
    assert!(out.contains("equal   true"));
    assert!(out.contains("1.1|∅ + 1|1"));
}

#[test]
fn canonical_basis_json_has_four_vectors() {
    let v = json("canonical-basis --r 1,0 --n 2");
    assert_eq!(v["vectors"].as_array().unwrap().len(), 4);
    assert_eq!(v["vectors"][1]["terms"]["1.1|∅"], "q");
}

#[test]
fn validation_errors_exit_two_and_name_the_flag() {
    for (args, flag) in [
        ("check --r 0,1 --n 2", "--r"),
        ("check --r 1,x --n 2", "--r"),
        ("check --n 2", "--r"),
        ("check --r 1,0 --n 2 --c0 0", "--c0"),
        ("check --k 0,-1 --n 2", "--c0"),
        ("check --k 0,-1 --c0 1 --n 2", "sorted"),
        ("dpartitions --n 2", "--d"),
        ("dpartitions --d 3 --r 1,0 --n 2", "--d"),
        ("gaudin-verify --c0 1/0 --k 0,1", "--c0"),
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args}: {out}{err}");
        assert!(err.contains(flag), "{args}: {err}");
    }
    assert_eq!(call("frobnicate").0, 2);
    assert_eq!(call("check --r 1,0 --n two").0, 2);
    assert_eq!(call("check --r 1,0 --n 2 --format yaml").0, 2);
    assert_eq!(call("--help").0, 0);
}

#[test]
fn k_input_agrees_with_charges() {
    // k# = -c0 r with c0 = 2, r = (2,1,0)
    let a = json("check --k -4,-2,0 --c0 2 --n 2");
    let b = json("check --r 2,1,0 --c0 2 --n 2");
    assert_eq!(a["cm_set"], b["cm_set"]);
    assert_eq!(a["lm_set"], b["lm_set"]);
    assert_eq!(a["equal"], true);
    let shifted = json("check --r 2,1,0 --shift 5 --n 2");
    assert_eq!(shifted["lm_set"], b["lm_set"]);
}

#[test]
fn listing_commands() {
    let v = json("dpartitions --d 2 --n 2");
    assert_eq!(v["dpartitions"].as_array().unwrap().len(), 5);
    let v = json("tableaux --d 2 --n 3");
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 20);
    let v = json("standard-symbols --r 1,0 --n 2");
    assert_eq!(v["levels"][2]["symbols"].as_array().unwrap().len(), 4);
    let v = json("lm-cells --r 0,0 --n 2");
    assert_eq!(v["set"].as_array().unwrap().len(), 3);
    let v = json("cm-cells-n2 --r 1,0");
    assert_eq!(v["family"].as_array().unwrap().len(), 4);
    let v = json("jm-cells --k -14,-7,0 --c0 1 --n 3");
    assert_eq!(v["cells"]["generic"], true);
}

#[test]
fn gaudin_verify_all_pairs() {
    let v = json("gaudin-verify --c0 -3/2 --k 0,3/2,3,9/2");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cb.json");
    let (code, out, _) = call(&format!("canonical-basis --r 1,1,0 --n 2 --format json --out {}", path.display()));
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 2);
    let bad = dir.path().join("missing").join("x.txt");
    assert_eq!(call(&format!("dpartitions --d 1 --n 1 --out {}", bad.display())).0, 2);
}

#[test]
fn output_is_deterministic() {
    let a = call("lm-cells --r 2,1,1,0 --n 3");
    let b = call("lm-cells --r 2,1,1,0 --n 3");
    assert_eq!(a, b);
}
