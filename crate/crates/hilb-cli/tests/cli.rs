use std::path::PathBuf;
use std::process::{Command, Output};

use hilb_cli::commands::{emit_decomposition, read_resolution};
use hilb_cli::export::{charts_csv, parse_charts_csv};
use hilb_cli::{execute, CommandConfig, Format, Subcommand, VerifyReport};
use proptest::prelude::*;

fn hilb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilb")).args(args).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("hilb-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn decompose_counts() {
    let dir = scratch("decompose");
    let d = dir.to_str().unwrap();
    for (r, n, xi, star) in [("1", "4", 5, Some(12)), ("2", "4", 15, Some(43)), ("1", "3", 4, None)] {
        let o = hilb(&["decompose", "--r", r, "--n", n, "--out", d]);
        assert!(o.status.success());
        let v = json(&o);
        assert_eq!(v["xi"]["cells"], xi);
        match star {
            Some(k) => assert_eq!(v["xiStar"]["cells"], k),
            None => assert!(v.get("xiStar").is_none()),
        }
    }
    // the n = 3 cells are triangles
    let xi3: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("xi.json")).unwrap()).unwrap();
    let cells = xi3["maximalCells"].as_array().unwrap();
    assert_eq!(cells.len(), 4);
    assert!(cells.iter().all(|c| c.as_array().unwrap().len() == 3));
}

#[test]
fn decompose_writes_every_resolution_and_star_meshes() {
    let dir = scratch("all");
    let o = hilb(&["decompose", "--r", "2", "--choice", "all", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["resolutions"].as_array().unwrap().len(), 81);
    let o = hilb(&["decompose", "--r", "2", "--format", "off", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    for k in 0..4 {
        let text = std::fs::read_to_string(dir.join(format!("xistar-star-{k}.off"))).unwrap();
        // 8 tetrahedra around the center: 8 outer triangles and 12 through the center
        assert!(text.starts_with("OFF\n# denominator 6\n7 20 0\n"), "{text}");
    }
}

#[test]
fn ideal_table_sizes() {
    for (r, rows) in [("1", 12), ("2", 43), ("3", 104)] {
        let o = hilb(&["ideals", "--r", r]);
        assert!(o.status.success());
        assert_eq!(json(&o).as_array().unwrap().len(), rows);
    }
    let o = hilb(&["ideals", "--r", "1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 13);
    assert_eq!(hilb(&["ideals", "--r", "6"]).status.code(), Some(2));
    assert_eq!(hilb(&["ideals", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(hilb(&["verify", "a1-4"]).status.code(), Some(0));
    assert_eq!(hilb(&["verify", "--suite", "ar-4", "--r", "2"]).status.code(), Some(0));
    assert_eq!(hilb(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(hilb(&["verify"]).status.code(), Some(2));
    assert_eq!(hilb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hilb(&["decompose", "--r", "1", "--n", "6"]).status.code(), Some(2));
    assert_eq!(hilb(&["resolve", "--choice", "7"]).status.code(), Some(2));
    let r: VerifyReport = serde_json::from_str(&stdout(&hilb(&["verify", "a1-4"]))).unwrap();
    assert_eq!(r.schema_version, hilb_cli::SCHEMA_VERSION);
    assert!(r.pass());
}

#[test]
fn verify_is_deterministic_given_the_seed() {
    let a = hilb(&["verify", "ar-4", "--r", "2", "--seed", "5"]);
    let b = hilb(&["verify", "ar-4", "--r", "2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn flop_round_trip_is_bit_exact() {
    let dir = scratch("flop");
    let p = |s: &str| dir.join(s).to_str().unwrap().to_string();
    assert!(hilb(&["resolve", "--choice", "1", "--out", &p("r1.json")]).status.success());
    assert!(hilb(&["resolve", "--choice", "2", "--out", &p("r2.json")]).status.success());
    let o = hilb(&["flop", &p("r1.json"), "--center", "1,1,1,1", "--axis", "2", "--out", &p("f.json")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4, "{}", stdout(&o));
    assert_eq!(std::fs::read(p("f.json")).unwrap(), std::fs::read(p("r2.json")).unwrap());
    assert!(hilb(&["flop", &p("f.json"), "--center", "1,1,1,1", "--axis", "1", "--out", &p("ff.json")])
        .status
        .success());
    assert_eq!(std::fs::read(p("ff.json")).unwrap(), std::fs::read(p("r1.json")).unwrap());
    // bad center or an axis already in place
    assert_eq!(hilb(&["flop", &p("r1.json"), "--center", "3,1,1,1", "--axis", "2"]).status.code(), Some(1));
    assert_eq!(hilb(&["flop", &p("r1.json"), "--center", "1,1,1,1", "--axis", "1"]).status.code(), Some(1));
    assert_eq!(hilb(&["flop", &p("missing.json"), "--center", "1,1,1,1", "--axis", "2"]).status.code(), Some(2));
}

#[test]
fn export_converts_and_round_trips() {
    let dir = scratch("export");
    let p = |s: &str| dir.join(s).to_str().unwrap().to_string();
    assert!(hilb(&["resolve", "--r", "2", "--choice", "1,2,3,1", "--out", &p("r.json")]).status.success());
    assert!(hilb(&["export", &p("r.json"), "--format", "csv", "--out", &p("r.csv")]).status.success());
    assert!(hilb(&["export", &p("r.csv"), "--out", &p("back.json")]).status.success());
    assert_eq!(std::fs::read(p("r.json")).unwrap(), std::fs::read(p("back.json")).unwrap());
    let o = hilb(&["export", &p("r.json"), "--format", "off"]);
    assert!(stdout(&o).starts_with("OFF\n"));
    std::fs::write(p("bad.csv"), "record,index,values\ncolor,0,red\n").unwrap();
    assert_eq!(hilb(&["export", &p("bad.csv")]).status.code(), Some(1));
}

#[test]
fn charts_of_a_resolution() {
    let mut cfg = CommandConfig::new(Subcommand::Charts);
    cfg.choice = Some("3".into());
    let out = execute(&cfg, None).unwrap();
    let rows: Vec<hilb_cli::export::ChartRow> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(parse_charts_csv(&charts_csv(&rows).unwrap()).unwrap(), rows);
    cfg.format = Format::Off;
    assert!(execute(&cfg, None).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn resolution_files_round_trip(axes in prop::collection::vec(1u8..=3, 4), csv in any::<bool>()) {
        let mut cfg = CommandConfig::new(Subcommand::Resolve);
        cfg.r = 2;
        cfg.choice = Some(axes.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
        cfg.format = if csv { Format::Csv } else { Format::Json };
        let text = execute(&cfg, None).unwrap().stdout;
        let res = read_resolution(&text).unwrap();
        prop_assert_eq!(res.choice_vector(), axes);
        prop_assert_eq!(emit_decomposition(&res.decomposition, Some(&res.choice_vector()), cfg.format).unwrap(), text);
    }
}
