use graphcx::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

const K4: &str = "c:one;v:0,4;e:(b1,b2)(b1,b3)(b1,b4)(b2,b3)(b2,b4)(b3,b4)";
const THREE: &str = "c:ord;v:3,1;e:(w1,b1)(w2,b1)(w3,b1)";

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["graphcx"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_str(&out.stdout).expect("json output") };
    (out.code, v)
}

#[test]
fn enumerate_k4() {
    let (code, v) = call(&["enumerate", "--colour", "one", "--vertices", "4", "--edges", "6", "--gc2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["count"], 1);
    assert_eq!(v["graphs"][0], K4);
}

#[test]
fn verify_mc_gamma0() {
    let (code, v) = call(&["verify", "mc-gamma0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "mc-gamma0");
}

#[test]
fn usage_errors() {
    assert_eq!(run(["graphcx", "frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(["graphcx", "delta", "--complex", "nope", "--graph", K4]).code, EXIT_USAGE);
    let (code, v) = call(&["verify", "no-such-suite"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(v["error"].as_str().unwrap().contains("unknown suite"));
    let (code, _) = call(&["delta", "--complex", "gc2", "--graph", "c:one;v:0,2;e:(b1,b1)"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn resource_caps_are_nonzero_exits() {
    let (code, v) = call(&["enumerate", "--vertices", "9", "--edges", "12", "--max-vertices", "5"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(v["error"].as_str().unwrap().contains("cap"));
    let (code, _) = call(&["enumerate", "--vertices", "4", "--edges", "6", "--max-edges", "5"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
}

#[test]
fn delta_and_bracket() {
    let (code, v) = call(&["delta", "--complex", "gc2", "--graph", K4]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["image"]["gc"], Value::Array(vec![]));
    let (_, v) = call(&["delta", "--complex", "mac", "--graph", K4]);
    assert!(!v["image"]["def"].as_array().unwrap().is_empty());
    let (_, v) = call(&["bracket", "--a", "c:one;v:0,2;e:(b1,b2)", "--b", "c:one;v:0,2;e:(b1,b2)"]);
    assert_eq!(v["bracket"]["gc"], Value::Array(vec![]));
}

#[test]
fn json_term_input() {
    let term = r#"{"colour":"one","blacks":2,"edges":[[1,2]],"coeff":"1/2"}"#;
    let (code, v) = call(&["delta", "--complex", "fgc2", "--graph", term]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["input"]["gc"][0]["coeff"], "1/2");
}

#[test]
fn cohomology_gc2() {
    let (code, v) = call(&["cohomology", "--complex", "gc2", "--degree", "0", "--max-vertices", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["total"], 1);
}

#[test]
fn weight_output() {
    let (code, v) = call(&["weight", "--graph", THREE, "--samples", "20000", "--seed", "3"]);
    assert_eq!(code, EXIT_OK);
    for k in ["graph", "value", "std_error", "samples", "seed"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["samples"], 20000);
    let (_, zero) = call(&["weight", "--graph", "c:ord;v:3,1;e:(w1,b1)(w2,b1)"]);
    assert_eq!(zero["value"], 0.0);
    assert_eq!(zero["samples"], 0);
}

#[test]
fn byte_identical_runs() {
    let args = ["graphcx", "weight", "--graph", THREE, "--samples", "30000", "--seed", "7"];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn config_file_and_override() {
    let dir = std::env::temp_dir().join(format!("graphcx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("caps.toml");
    std::fs::write(&path, "samples = 5000\nseed = 4\n").unwrap();
    let p = path.to_str().unwrap();
    let (_, v) = call(&["weight", "--graph", THREE, "--config", p]);
    assert_eq!((v["samples"].as_u64(), v["seed"].as_u64()), (Some(5000), Some(4)));
    let (_, v) = call(&["weight", "--graph", THREE, "--config", p, "--seed", "9"]);
    assert_eq!(v["seed"], 9);
    std::fs::write(&path, "bogus = 1\n").unwrap();
    assert_eq!(call(&["weight", "--graph", THREE, "--config", p]).0, EXIT_USAGE);
}

#[test]
fn represent_schouten() {
    let (code, v) = call(&["represent", "--graph", "c:one;v:0,2;e:(b1,b2)", "--dim", "2", "--arg", "p1 p2", "--arg", "x1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["value"], "p2");
    let (code, _) = call(&["represent", "--graph", "c:ord;v:1,1;e:(w1,b1)", "--dim", "2", "--arg", "x1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn gauge_and_project() {
    let (code, v) = call(&["gauge", "--h", K4]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["truncation"], 6);
    let (_, w) = call(&["delta", "--complex", "mac", "--graph", K4]);
    let attach = serde_json::to_string(&w["image"]["def"]).unwrap();
    let (code, p) = call(&["project", "--graph", &attach]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(p["member"], false);
    assert_eq!(p["ideal"], "I_bb_prime");
}

#[test]
fn pretty_is_the_same_json() {
    let a = run(["graphcx", "verify", "mc-gamma0"]).stdout;
    let b = run(["graphcx", "verify", "mc-gamma0", "--pretty"]).stdout;
    assert_ne!(a, b);
    assert_eq!(serde_json::from_str::<Value>(&a).unwrap(), serde_json::from_str::<Value>(&b).unwrap());
}
