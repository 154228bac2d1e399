use std::process::Command;

use serde_json::Value;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out: Vec<u8> = Vec::new();
    let mut err: Vec<u8> = Vec::new();
    let mut argv = vec!["redwords"];
    argv.extend_from_slice(args);
    let code = redwords_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run_cli(args);
    assert_eq!(code, 0, "args {args:?} failed: {err}");
    out
}

#[test]
fn words_longest_element() {
    let out = stdout_of(&["words", "A", "4", "w0"]);
    let words: Vec<&str> = out.lines().collect();
    assert_eq!(words.len(), 16);
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
    assert!(words.contains(&"121321") && words.contains(&"321323"));
    assert_eq!(stdout_of(&["words", "A", "4", "w0", "--count"]), "16\n");
}

#[test]
fn words_of_specific_elements() {
    assert_eq!(stdout_of(&["words", "A", "4", "3412"]), "2132\n2312\n");
    assert_eq!(stdout_of(&["words", "B", "2", "w0"]), "0101\n1010\n");
    assert_eq!(stdout_of(&["words", "B", "3", "-3,-2,-1"]), "010210\n012010\n");
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["words", "A", "4", "99999"][..],
        &["words", "Z", "4", "w0"][..],
        &["words", "A", "1", "w0"][..],
        &["distance", "A", "4", "w0", "1232"][..],
        &["diameter", "A", "4", "3412", "--shortcut"][..],
        &["formulas", "A"][..],
        &["formulas", "G2", "2"][..],
        &["formulas", "E8", "8"][..],
    ] {
        let (code, _, err) = run_cli(args);
        assert_eq!(code, 2, "args {args:?} gave stderr {err}");
        assert!(err.contains("error"), "args {args:?} gave stderr {err}");
    }
}

#[test]
fn budget_exceeded_exits_3() {
    let (code, _, err) = run_cli(&["words", "A", "4", "w0", "--budget", "5"]);
    assert_eq!(code, 3, "stderr: {err}");
    let (code, _, _) = run_cli(&["conjecture", "A", "4", "--element-budget", "10"]);
    assert_eq!(code, 3);
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
    let (code, out, _) = run_cli(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains("redwords"));
}

#[test]
fn graph_dot_is_pinned() {
    let expected = "graph \"A4 3412\" {\n  node [shape=box];\n  \"2132\";\n  \"2312\";\n  \"2132\" -- \"2312\" [label=\"X_{13,24}\"];\n}\n";
    assert_eq!(stdout_of(&["graph", "A", "4", "3412"]), expected);
}

#[test]
fn graph_json_is_pinned_and_reruns_identically() {
    let out = stdout_of(&["graph", "A", "4", "3412", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["word_count"], 2);
    assert_eq!(v["edge_count"], 1);
    assert_eq!(v["l2_size"], 2);
    assert_eq!(v["vertices"], serde_json::json!(["2132", "2312"]));
    assert_eq!(v["edges"][0]["label"], "X_{13,24}");
    let again = stdout_of(&["graph", "A", "4", "3412", "--format", "json"]);
    assert_eq!(out, again);
}

/// Minimal structural validator for the subset of JSON Schema the graph
/// schema uses: type, required, properties, additionalProperties, items,
/// enum, minimum.
fn conforms(value: &Value, schema: &Value) -> Result<(), String> {
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{value} not in enum {options:?}"));
        }
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = value.as_object().ok_or_else(|| format!("{value} is not an object"))?;
            let props = schema["properties"].as_object().unwrap();
            if let Some(required) = schema.get("required").and_then(Value::as_array) {
                for key in required {
                    let key = key.as_str().unwrap();
                    if !obj.contains_key(key) {
                        return Err(format!("missing required key {key}"));
                    }
                }
            }
            if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in obj.keys() {
                    if !props.contains_key(key) {
                        return Err(format!("unexpected key {key}"));
                    }
                }
            }
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    conforms(v, sub).map_err(|e| format!("{key}: {e}"))?;
                }
            }
            Ok(())
        }
        Some("array") => {
            let items = value.as_array().ok_or_else(|| format!("{value} is not an array"))?;
            if let Some(sub) = schema.get("items") {
                for (i, v) in items.iter().enumerate() {
                    conforms(v, sub).map_err(|e| format!("[{i}]: {e}"))?;
                }
            }
            Ok(())
        }
        Some("string") => {
            value.as_str().map(|_| ()).ok_or_else(|| format!("{value} is not a string"))
        }
        Some("integer") => {
            let n = value.as_i64().ok_or_else(|| format!("{value} is not an integer"))?;
            if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
                if n < min {
                    return Err(format!("{n} below minimum {min}"));
                }
            }
            Ok(())
        }
        other => Err(format!("unsupported schema type {other:?}")),
    }
}

#[test]
fn graph_json_matches_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/graph.schema.json")).unwrap();
    for args in [
        &["graph", "A", "4", "w0", "--format", "json"][..],
        &["graph", "B", "3", "w0", "--format", "json"][..],
        &["graph", "A", "4", "1234", "--format", "json"][..],
        &["graph", "B", "3", "-3,-2,-1", "--format", "json"][..],
    ] {
        let v: Value = serde_json::from_str(&stdout_of(args)).unwrap();
        if let Err(e) = conforms(&v, &schema) {
            panic!("{args:?} violates the schema: {e}");
        }
    }
}

#[test]
fn graph_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.dot");
    let (code, out, _) =
        run_cli(&["graph", "A", "4", "3412", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout_of(&["graph", "A", "4", "3412"]));
}

#[test]
fn distance_output_is_pinned() {
    let expected = "2132 0 0\n2312 1 1\neccentricity: 1\nmax gap: 0\n";
    assert_eq!(stdout_of(&["distance", "A", "4", "3412", "2132"]), expected);
    let out = stdout_of(&["distance", "A", "4", "w0", "121321"]);
    assert!(out.contains("eccentricity: 7"));
    assert!(out.ends_with("max gap: 0\n"));
    assert!(out.contains("321323 7 7"));
}

#[test]
fn diameter_output_is_pinned() {
    assert_eq!(stdout_of(&["diameter", "A", "4", "w0"]), "diameter: 7 (all pairs)\n");
    assert_eq!(
        stdout_of(&["diameter", "A", "4", "w0", "--shortcut"]),
        "diameter: 7 (closed form)\n"
    );
    assert_eq!(
        stdout_of(&["diameter", "B", "2", "w0", "--shortcut"]),
        "diameter: 1 (closed form)\n"
    );
    assert_eq!(stdout_of(&["diameter", "B", "3", "w0"]), "diameter: 13 (all pairs)\n");
}

#[test]
fn canonical_output_is_pinned() {
    assert_eq!(
        stdout_of(&["canonical", "A", "6", "316425", "--levels"]),
        "213543\ncrossings: H_{23},H_{13},H_{24},H_{56},H_{26},H_{46}\nlevels: 3,3,4,6,6,6\n"
    );
    assert_eq!(stdout_of(&["canonical", "B", "3", "-3,-2,-1"]), "010210\n");
    assert_eq!(stdout_of(&["canonical", "B", "3", "w0"]), "010121012\n");
}

#[test]
fn accessible_survey_is_pinned() {
    let expected = "inaccessible: 132132 witness 231231 distance 7 separation 5\n\
                    inaccessible: 213213 witness 312312 distance 7 separation 5\n\
                    inaccessible: 231231 witness 132132 distance 7 separation 5\n\
                    inaccessible: 312312 witness 213213 distance 7 separation 5\n\
                    accessible: 12 of 16\n";
    assert_eq!(stdout_of(&["accessible", "A", "4", "w0"]), expected);
}

#[test]
fn accessible_single_word() {
    let out = stdout_of(&["accessible", "A", "4", "w0", "213213"]);
    assert!(out.contains("accessible: false"));
    assert!(out.contains("witness: 312312 distance 7 separation 5"));
    let out = stdout_of(&["accessible", "A", "4", "w0", "121321"]);
    assert!(out.contains("accessible: true"));
    assert!(out.contains("eccentricity: 7"));
}

#[test]
fn flats_outputs() {
    let out = stdout_of(&["flats", "A", "4"]);
    assert!(out.ends_with("count: 7\n"));
    assert!(out.contains("X_{123}: H_{12},H_{13},H_{23}"));
    assert!(out.contains("X_{12,34}: H_{12},H_{34}"));
    let out = stdout_of(&["flats", "B", "3", "-3,-2,-1"]);
    assert_eq!(
        out,
        "{x1=0,x2=-x3}: x1=0,x2=-x3\n{x2=0,x1=-x3}: x2=0,x1=-x3\n{x3=0,x1=-x2}: x3=0,x1=-x2\ncount: 3\n"
    );
    let out = stdout_of(&["flats", "B", "2"]);
    assert_eq!(out, "{x1=0,x2=0}: x1=0,x2=0,x1=x2,x1=-x2\ncount: 1\n");
}

#[test]
fn formulas_outputs() {
    assert_eq!(stdout_of(&["formulas", "B", "4"]), "58\n");
    assert_eq!(stdout_of(&["formulas", "A", "5"]), "25\n");
    assert_eq!(stdout_of(&["formulas", "E8"]), "4900\n");
    assert_eq!(stdout_of(&["formulas", "I2", "7"]), "1\n");
    assert_eq!(
        stdout_of(&["formulas", "D", "4", "--geometry"]),
        "closed form: 34\ngeometry: 34\nagree: true\n"
    );
}

#[test]
fn conjecture_table_is_deterministic_across_workers() {
    let sequential = stdout_of(&["conjecture", "A", "4", "--workers", "1"]);
    let parallel = stdout_of(&["conjecture", "A", "4", "--workers", "4"]);
    let default = stdout_of(&["conjecture", "A", "4"]);
    assert_eq!(sequential, parallel);
    assert_eq!(sequential, default);
    assert!(sequential.contains("all within bounds: true"));
    assert!(sequential.contains("double bound holds: true"));
    assert!(sequential.contains("min ratio: 0.500 (3412)"));
    assert!(sequential.contains("max ratio: 1.000 (1432)"));
    assert!(sequential.contains("rows: 24"));
}

#[test]
fn conjecture_json_output() {
    let out = stdout_of(&["conjecture", "B", "2", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["all_within"], true);
    assert_eq!(v["all_double"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    assert_eq!(v["min_ratio"]["element"], "-1,-2");
}

#[test]
fn spawned_binary_reads_environment() {
    let exe = env!("CARGO_BIN_EXE_redwords");
    let output = Command::new(exe)
        .args(["words", "A", "4", "w0"])
        .env("REDWORDS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("budget"));

    let output = Command::new(exe)
        .args(["words", "A", "4", "w0"])
        .env("REDWORDS_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));

    let output = Command::new(exe)
        .args(["words", "A", "4", "w0", "--budget", "100"])
        .env("REDWORDS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "the flag outranks the environment");

    let output = Command::new(exe).args(["diameter", "B", "3", "w0"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&output.stdout), "diameter: 13 (all pairs)\n");
}

#[test]
fn identity_words_and_graph() {
    assert_eq!(stdout_of(&["words", "A", "4", "1234"]), "\n");
    assert_eq!(stdout_of(&["words", "A", "4", "1234", "--count"]), "1\n");
    let out = stdout_of(&["graph", "B", "2", "1,2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["word_count"], 1);
    assert_eq!(v["edge_count"], 0);
}
