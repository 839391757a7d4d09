use primegraph::cli::run;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("primegraph").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn digit_runs(s: &str, into: &mut Vec<String>) {
    let mut cur = String::new();
    for c in s.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_digit() {
            cur.push(c);
        } else if !cur.is_empty() {
            into.push(std::mem::take(&mut cur));
        }
    }
}

/// Every integer in the JSON values, including digits inside strings. Keys
/// are ignored.
fn json_numbers(v: &Value, into: &mut Vec<String>) {
    match v {
        Value::Number(n) => into.push(n.to_string()),
        Value::String(s) => digit_runs(s, into),
        Value::Array(items) => items.iter().for_each(|i| json_numbers(i, into)),
        Value::Object(map) => map.values().for_each(|i| json_numbers(i, into)),
        Value::Bool(_) | Value::Null => {}
    }
}

/// Text and JSON output of one invocation carry the same multiset of
/// integers. `header_lines` skips column headings in the text form.
fn assert_same_numbers(args: &[&str], header_lines: usize) {
    let (code_text, text) = invoke(args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (code_json, json) = invoke(&json_args);
    assert_eq!(code_text, code_json, "{args:?}");
    let value: Value = serde_json::from_str(&json)
        .unwrap_or_else(|e| panic!("{args:?} emitted invalid JSON: {e}\n{json}"));

    let mut from_text = Vec::new();
    for line in text.lines().skip(header_lines) {
        digit_runs(line, &mut from_text);
    }
    let mut from_json = Vec::new();
    json_numbers(&value, &mut from_json);
    from_text.sort();
    from_json.sort();
    assert_eq!(
        from_text, from_json,
        "{args:?}\ntext:\n{text}\njson:\n{json}"
    );
}

#[test]
fn every_subcommand_text_and_json_agree() {
    let cases: &[(&[&str], usize)] = &[
        (&["graph", "sym", "27"], 0),
        (&["graph", "alt", "30"], 0),
        (&["degpat", "sym", "27"], 0),
        (&["degpat", "alt", "27"], 0),
        (&["compare", "sym", "26", "27"], 0),
        (&["compare", "sym", "20", "22"], 0),
        (&["compare", "sym", "10", "12"], 0),
        (&["compare", "alt", "24", "25"], 0),
        (&["compare", "alt", "25", "26"], 0),
        (&["compare", "alt", "12", "16"], 0),
        (&["goldbach", "--limit", "5000"], 0),
        (&["growth", "--limit", "200"], 0),
        (&["census", "s27"], 0),
        (&["bound", "alt", "125"], 0),
        (&["bound", "sym", "875"], 0),
        (&["bound", "alt", "123"], 0),
        (&["table1", "--lo", "100", "--hi", "1000"], 1),
        (&["family", "mod144", "302"], 0),
        (&["family", "delta", "5", "4"], 0),
        (&["family", "delta", "3", "5"], 0),
        (&["family", "delta", "7", "9"], 0),
        (&["family", "survey", "5", "10"], 0),
        (&["family", "generator", "2", "3", "--count", "4"], 0),
        (&["family", "generator", "10", "7", "--count", "2"], 0),
        (
            &["family", "generator", "4", "1", "--search-bound", "20"],
            0,
        ),
    ];
    for (args, headers) in cases {
        assert_same_numbers(args, *headers);
    }
}

#[test]
fn graph_json_round_trips_through_the_cli() {
    for args in [["graph", "sym", "40"], ["graph", "alt", "41"]] {
        let mut json_args = args.to_vec();
        json_args.extend(["--format", "json"]);
        let (code, json) = invoke(&json_args);
        assert_eq!(code, 0);
        let g = primegraph::render::graph_from_json(&json).unwrap();
        let n = args[2].parse().unwrap();
        let expected = match args[1] {
            "sym" => primegraph_core::graph::PrimeGraph::symmetric(n).unwrap(),
            _ => primegraph_core::graph::PrimeGraph::alternating(n).unwrap(),
        };
        assert_eq!(g, expected);
    }
}

#[test]
fn large_values_are_strings_in_json() {
    let (code, json) = invoke(&["family", "delta", "7", "31", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&json).unwrap();
    let m = v["m"].as_str().expect("7^31 does not fit in 64 bits");
    assert_eq!(m, "157775382034845806615042743");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table1", "--lo", "100", "--hi", "3000", "--format", "json"][..],
        &["goldbach", "--limit", "20000"][..],
        &["family", "generator", "3", "2", "--count", "6"][..],
    ] {
        assert_eq!(invoke(args), invoke(args));
    }
}
