#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn pathbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathbox"))
        .args(args)
        .env_remove("PATHBOX_THREADS")
        .output()
        .expect("spawn pathbox")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Replaces every value inside the `"elapsed_ms"` object with `null`, leaving
/// all other bytes untouched.
pub fn mask_timings(json: &str) -> String {
    let mut out = String::with_capacity(json.len());
    let mut inside = false;
    for line in json.split_inclusive('\n') {
        if inside {
            if line.trim_start().starts_with('}') {
                inside = false;
                out.push_str(line);
                continue;
            }
            let (key, rest) = line.split_once(": ").expect("key: value line");
            let comma = if rest.trim_end().ends_with(',') {
                ","
            } else {
                ""
            };
            let newline = if line.ends_with('\n') { "\n" } else { "" };
            out.push_str(&format!("{key}: null{comma}{newline}"));
            continue;
        }
        if line.trim_start().starts_with("\"elapsed_ms\": {") {
            inside = true;
        }
        out.push_str(line);
    }
    out
}
