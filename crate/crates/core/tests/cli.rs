use liedim::cli::{run_args, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run_args(std::iter::once("liedim").chain(args.iter().copied()))
}

fn schema(name: &str) -> Value {
    let path = format!("{}/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// The subset of JSON Schema the shipped schemas use: type, const, enum,
/// required, properties, additionalProperties, items and local $ref.
fn validate(root: &Value, s: &Value, v: &Value, at: &str) -> Result<(), String> {
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").ok_or(format!("unsupported $ref {r}"))?;
        return validate(root, &root["$defs"][name], v, at);
    }
    if let Some(t) = s.get("type") {
        let types: Vec<&str> = match t {
            Value::String(t) => vec![t.as_str()],
            Value::Array(ts) => ts.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{at}: bad type keyword")),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return Err(format!("{at}: expected {types:?}, got {v}"));
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            return Err(format!("{at}: expected {c}, got {v}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return Err(format!("{at}: {v} not in {e:?}"));
        }
    }
    if let Some(obj) = v.as_object() {
        for r in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            let r = r.as_str().unwrap();
            if !obj.contains_key(r) {
                return Err(format!("{at}: missing {r}"));
            }
        }
        let props = s.get("properties").and_then(Value::as_object);
        for (k, x) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(ps) => validate(root, ps, x, &format!("{at}.{k}"))?,
                None => match s.get("additionalProperties") {
                    Some(Value::Bool(false)) => return Err(format!("{at}: unexpected key {k}")),
                    Some(extra @ Value::Object(_)) => validate(root, extra, x, &format!("{at}.{k}"))?,
                    _ => {}
                },
            }
        }
    }
    if let (Some(items), Some(arr)) = (s.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            validate(root, items, x, &format!("{at}[{i}]"))?;
        }
    }
    Ok(())
}

fn export(max_param: &str) -> String {
    let path = std::env::temp_dir().join(format!("liedim-cli-test-{}-{max_param}.json", std::process::id()));
    let o = cli(&["export", "--out", path.to_str().unwrap(), "--max-param", max_param]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    text
}

#[test]
fn export_matches_schema_and_is_stable() {
    let text = export("10");
    let doc: Value = serde_json::from_str(&text).unwrap();
    let s = schema("atlas.schema.json");
    validate(&s, &s, &doc, "$").unwrap();
    assert_eq!(text, export("10"));
    // serde_json::Value sorts keys, so read the order off the text.
    let first = &text[text.find("\"algebras\"").unwrap()..];
    let first = &first[..first.find('}').unwrap()];
    let mut keys = Vec::new();
    for line in first.lines().map(str::trim) {
        if let Some(k) = line.strip_prefix('"').and_then(|l| l.split('"').next()) {
            keys.push(k);
        }
    }
    assert_eq!(keys, ["algebras", "name", "family", "params", "n"]);
    let rest = &text[text.find("\"params\"").unwrap()..];
    let order = [
        "\"dim_g\"",
        "\"dim_k\"",
        "\"dim_s\"",
        "\"rk_r\"",
        "\"out_group\"",
        "\"max_compact\"",
    ];
    let pos: Vec<usize> = order.iter().map(|k| rest.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
}

#[test]
fn schema_rejects_malformed_documents() {
    let s = schema("atlas.schema.json");
    let mut doc: Value = serde_json::from_str(&export("4")).unwrap();
    doc["schema_version"] = Value::from(2);
    assert!(validate(&s, &s, &doc, "$").is_err());
    doc["schema_version"] = Value::from(1);
    doc["algebras"][0]["dim_s"] = Value::from("five");
    assert!(validate(&s, &s, &doc, "$").is_err());
}

#[test]
fn verify_json_matches_schema_and_text() {
    let o = cli(&["verify", "--scope", "complex", "--max-param", "12", "--json"]);
    assert_eq!(o.code, 0);
    let cases: Value = serde_json::from_str(&o.stdout).unwrap();
    let s = schema("cases.schema.json");
    validate(&s, &s, &cases, "$").unwrap();

    let text = cli(&["verify", "--scope", "complex", "--max-param", "12"]);
    assert_eq!(text.code, 0);
    let n = cases.as_array().unwrap().len();
    assert!(text.stdout.contains(&format!("{n} cases")), "{}", text.stdout);
    let worst = cases
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["route"] != "equality_case_lemma23")
        .map(|c| c["margin"].as_i64().unwrap())
        .min()
        .unwrap();
    assert!(
        text.stdout.contains(&format!("worst strict margin: {worst} ")),
        "{}",
        text.stdout
    );
}

#[test]
fn text_and_json_agree_for_queries() {
    let t = cli(&["vcd", "sl(3,R)+sl(3,R)", "--rkq", "2", "--irreducible"]);
    let j: Value =
        serde_json::from_str(&cli(&["vcd", "sl(3,R)+sl(3,R)", "--rkq", "2", "--irreducible", "--json"]).stdout)
            .unwrap();
    assert!(t.stdout.starts_with(&format!("vcd = {}, gd = {}", j["vcd"], j["gd"])));
    assert_eq!(j["vcd"], 8);

    let t = cli(&["oracle", "--family", "su_pq", "--p", "2", "--q", "3"]);
    let j: Value =
        serde_json::from_str(&cli(&["oracle", "--family", "su_pq", "--p", "2", "--q", "3", "--json"]).stdout).unwrap();
    assert_eq!(j["bound"], 8);
    assert!(t
        .stdout
        .contains(&format!("bound {}, oracle max {}", j["bound"], j["oracle_max"])));

    let j: Value = serde_json::from_str(&cli(&["info", "e8(8)", "--json"]).stdout).unwrap();
    assert_eq!(
        (j["dim_g"].as_i64(), j["dim_s"].as_i64(), j["rk_r"].as_i64()),
        (Some(248), Some(128), Some(8))
    );
    assert!(cli(&["info", "e8(8)"]).stdout.contains("dim S             128"));
}

#[test]
fn involutions_report_margins() {
    let j: Value = serde_json::from_str(&cli(&["involutions", "so(4,4)", "--json"]).stdout).unwrap();
    let entries = j["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["order"] == 3));
    let tgt = j["dim_s"].as_i64().unwrap() - j["rk_r"].as_i64().unwrap();
    for e in entries {
        assert_eq!(e["margin"].as_i64().unwrap(), tgt - e["dim_s"].as_i64().unwrap());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["verify", "--scope", "complex", "--max-param", "32"]).code, 0);
    let o = cli(&["vcd", "sl(3,R)+so(1,4)", "--irreducible", "--rkq", "1"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("isotypic"));
    assert_eq!(cli(&["vcd", "sl(3,R)+sl(3,R)", "--irreducible", "--rkq", "3"]).code, 2);
    let o = cli(&["info", "sl(3,X)"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("position"), "{}", o.stderr);
    assert_eq!(
        cli(&[
            "oracle",
            "--matrix",
            "--family",
            "so_pq",
            "--p",
            "2",
            "--q",
            "3",
            "--element",
            "spin"
        ])
        .code,
        2
    );
    assert_eq!(cli(&["--help"]).code, 0);
}
