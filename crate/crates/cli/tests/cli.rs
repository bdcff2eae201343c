use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn lzpl<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_lzpl"))
        .args(args)
        .env_remove("LZPL_SCALE_LIMITS")
        .output()
        .expect("run lzpl")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn write(dir: &Path, name: &str, data: &[u8]) -> String {
    let p = dir.join(name);
    fs::write(&p, data).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn parse_reports_token_counts() {
    let dir = TempDir::new().unwrap();
    let abab = write(dir.path(), "abab", b"abab");
    let out = lzpl(["parse", &abab, "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "strategy,tokens,pointers,literals\ngreedy,3,1,2\noptimal,3,1,2\nflexible,3,1,2\n"
    );

    let out = lzpl([
        "parse",
        &abab,
        "--strategy",
        "greedy",
        "--format",
        "json",
        "--tokens",
    ]);
    let v = json(&out);
    assert_eq!(v["length"], 4);
    assert_eq!(v["results"][0]["token_count"], 3);
    assert_eq!(v["results"][0]["tokens"]["tokens"][2]["kind"], "pointer");
}

#[test]
fn parse_static_dictionary_and_reverse() {
    let dir = TempDir::new().unwrap();
    let text = write(dir.path(), "t", b"abcd");
    let dict = write(dir.path(), "d", b"a\nab\nb\nbc\nbcd\n");
    let out = lzpl([
        "parse", &text, "--family", "static", "--dict", &dict, "--format", "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = stdout(&out);
    assert!(csv.contains("greedy,3,"), "{csv}");
    assert!(csv.contains("optimal,2,"), "{csv}");
    assert!(csv.contains("reverse,2,"), "{csv}");

    let out = lzpl(["parse", &text, "--strategy", "reverse"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lzpl"))
        .args(["parse", "-", "--strategy", "greedy", "--format", "csv"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"aaaa").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        stdout(&out),
        "strategy,tokens,pointers,literals\ngreedy,3,2,1\n"
    );
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let aab = write(dir.path(), "aab", b"aab");

    let out = lzpl(["verify", &aab]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    // LZ78 is not suffix-closed: "ab" is a phrase at time 3 but "b" is not
    let out = lzpl(["verify", &aab, "--family", "lz78"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let w = &v["failures"][0]["witness"];
    assert_eq!(w["phrase"], "ab");
    assert_eq!(w["k"], 1);

    let out = lzpl([
        "verify",
        "--random",
        "200",
        "--window",
        "8",
        "--alphabet",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cases"], 200);

    assert_eq!(
        lzpl(["verify", "--window", "nope", &aab]).status.code(),
        Some(2)
    );
    assert_eq!(lzpl(["verify"]).status.code(), Some(2));
}

#[test]
fn verify_is_reproducible_by_seed() {
    let run = |seed: &str| {
        stdout(&lzpl([
            "verify", "--random", "50", "--family", "lz78", "--seed", seed,
        ]))
    };
    assert_eq!(run("7"), run("7"));
}

#[test]
fn scale_limits_are_enforced() {
    let dir = TempDir::new().unwrap();
    let long = write(dir.path(), "long", &[b'a'; 100]);
    let out = lzpl([
        "parse",
        &long,
        "--strategy",
        "optimal",
        "--graph-text",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("50"));

    let out = Command::new(env!("CARGO_BIN_EXE_lzpl"))
        .args(["parse", &long, "--strategy", "optimal"])
        .env("LZPL_SCALE_LIMITS", "graph_text=50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn graph_emits_dot() {
    let dir = TempDir::new().unwrap();
    let text = write(dir.path(), "t", b"abba");
    let dict = write(dir.path(), "d", b"ab\nba\nbba\n");
    let out = lzpl([
        "graph",
        &text,
        "--family",
        "static",
        "--dict",
        &dict,
        "--highlight",
        "optimal",
    ]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"), "{dot}");
    assert!(dot.contains("0 -> 2"));
    assert!(dot.contains("1 -> 4"));
    assert!(dot.contains("2 -> 4"));
    assert!(dot.contains("bold"));
}

#[test]
fn compress_round_trip() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "in", b"abab");
    let packed = dir.path().join("packed").to_str().unwrap().to_owned();
    let unpacked = dir.path().join("out").to_str().unwrap().to_owned();

    let out = lzpl(["compress", &input, &packed]);
    assert!(out.status.success());
    assert_eq!(json(&out)["encoded_bits"], 35);
    let stream = fs::read(&packed).unwrap();
    assert_eq!(&stream[..4], b"LZPL");
    assert_eq!(&stream[15..], &[0x30, 0x98, 0xA0, 0x02, 0x20]);

    assert!(lzpl(["decompress", &packed, &unpacked]).status.success());
    assert_eq!(fs::read(&unpacked).unwrap(), b"abab");

    let out = lzpl(["decompress", &input, &unpacked]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr)
        .to_lowercase()
        .contains("magic"));

    assert_eq!(
        lzpl(["compress", &input, &packed, "--offset-bits", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compress_strategies_and_edge_inputs() {
    let dir = TempDir::new().unwrap();
    let data: Vec<u8> = (0..3000u32).map(|i| (i * i % 7) as u8 + b'a').collect();
    for (name, bytes) in [("empty", Vec::new()), ("one", vec![0xff]), ("text", data)] {
        let input = write(dir.path(), name, &bytes);
        for strategy in ["greedy", "optimal", "flexible"] {
            let packed = format!("{input}.{strategy}.lzpl");
            let back = format!("{input}.{strategy}.out");
            let out = lzpl([
                "compress",
                &input,
                &packed,
                "--strategy",
                strategy,
                "--offset-bits",
                "8",
            ]);
            assert!(
                out.status.success(),
                "{}",
                String::from_utf8_lossy(&out.stderr)
            );
            assert!(lzpl(["decompress", &packed, &back]).status.success());
            assert_eq!(fs::read(&back).unwrap(), bytes, "{name} {strategy}");
        }
    }
}

#[test]
fn search_reports_outcomes() {
    let out = lzpl([
        "search", "--family", "lz77", "--budget", "2000", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["found"].is_null());
    assert_eq!(v["explored"], 2000);

    let out = lzpl([
        "search", "--family", "lz77", "--budget", "0", "--format", "json",
    ]);
    assert_eq!(json(&out)["explored"], 0);

    let out = lzpl(["search", "--family", "lz78", "--budget", "5000"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("aaaaabaaab"));

    let out = lzpl([
        "search", "--family", "static", "--budget", "5000", "--format", "json",
    ]);
    let v = json(&out);
    let found = &v["found"];
    assert!(
        found.is_object(),
        "static dictionaries without closure admit gaps"
    );
    assert!(found["greedy_tokens"].as_u64() > found["optimal_tokens"].as_u64());

    assert_eq!(lzpl(["search", "--max-len", "30"]).status.code(), Some(2));
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out)
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn bench_rows() {
    let dir = TempDir::new().unwrap();
    for (name, data) in [("a", &b"abababab"[..]), ("b", b"aaaaaaaaab"), ("c", b"")] {
        write(dir.path(), name, data);
    }
    let corpus = dir.path().to_str().unwrap();
    let out = lzpl(["bench", corpus, "--windows", "4,unbounded"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(
        rows[0].join(","),
        "file,family,h,strategy,tokens,payload_bits,wall_time_us,failure"
    );
    assert_eq!(rows.len(), 1 + 3 * 2 * 2);
    assert!(rows[1..].iter().all(|r| r[7].is_empty()));
    let tokens = |file: &str, h: &str, s: &str| {
        rows.iter()
            .find(|r| r[0] == file && r[2] == h && r[3] == s)
            .map(|r| r[4].clone())
            .unwrap()
    };
    assert_eq!(tokens("a", "unbounded", "greedy"), "4");
    assert_eq!(tokens("c", "4", "optimal"), "0");

    let out = lzpl([
        "bench",
        corpus,
        "--family",
        "lz78",
        "--strategies",
        "greedy,optimal,flexible",
    ]);
    assert_eq!(csv_rows(&out).len(), 1 + 3 * 3);

    let empty = TempDir::new().unwrap();
    let out = lzpl(["bench", empty.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(csv_rows(&out).len(), 1);
}

#[cfg(unix)]
#[test]
fn bench_records_unreadable_files() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "a", b"abab");
    write(dir.path(), "b", b"abba");
    std::os::unix::fs::symlink(dir.path().join("missing"), dir.path().join("z")).unwrap();
    let out = lzpl(["bench", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1 + 2 * 4 * 2 + 1);
    let failed: Vec<_> = rows[1..].iter().filter(|r| !r[7].is_empty()).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0][0], "z");
}
