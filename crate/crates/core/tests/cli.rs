use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-lattices"))
        .args(args)
        .env_remove("PLANAR_SIEVE_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_and_classify() {
    let o = bin(&["count", "--set", "all", "--max-height", "2"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "4\n"));
    let o = bin(&["count", "--set", "wr", "--max-height", "10", "--method", "bruteforce"]);
    assert_eq!(stdout(&o), "17\n");
    let o = bin(&["classify", "--tau", "1,2,3,4"]);
    assert_eq!(stdout(&o), "WellRounded height_quadruple=4 height_pair=2\n");
}

#[test]
fn jsonl_round_trips_through_classify() {
    for set in ["all", "semistable", "wr"] {
        let o = bin(&["enumerate", "--set", set, "--max-height", "5", "--format", "jsonl"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        assert!(!text.is_empty());
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            let tau = format!("{},{},{},{}", v["a"], v["b"], v["c"], v["d"]);
            let c = stdout(&bin(&["classify", "--tau", &tau]));
            let fields: Vec<&str> = c.split_whitespace().collect();
            assert_eq!(fields[0], v["kind"].as_str().unwrap(), "{line}");
            let key = if set == "wr" { "height_pair" } else { "height_quadruple" };
            let height = fields.iter().find_map(|f| f.strip_prefix(&format!("{key}="))).unwrap();
            assert_eq!(height, v["height"].to_string(), "{line}");
        }
    }
}

#[test]
fn reduce_height_and_j() {
    let o = bin(&["reduce", "--basis", "2,0,1,3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("re=1/2 im_sq=9/4"), "{out}");
    assert!(out.contains("arithmetic=true"));

    let out = stdout(&bin(&["height", "--tau", "1,2,3,4"]));
    assert!(out.starts_with("weil_height_bound=4.00000000000 ceiling=8.94427191000"), "{out}");

    let out = stdout(&bin(&["j", "--tau", "0,1,1,1"]));
    assert!(out.starts_with("re=1728.00000000 im=0 "), "{out}");
    let out = stdout(&bin(&["j", "--tau", "0,1,1,1", "--normalized", "--terms", "30"]));
    assert!(out.starts_with("re=1.00000000000 "), "{out}");
    assert!(out.trim_end().ends_with("terms=30"));
}

#[test]
fn verify_haar_and_determinism() {
    let o = bin(&["verify", "--suite", "haar"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fraction = 0.0450703414"));
    let a = bin(&["verify", "--suite", "modular", "--seed", "11"]);
    let b = bin(&["verify", "--suite", "modular", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn census_csv() {
    let o = bin(&["--threads", "2", "census", "--heights", "10,20"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "T,n1,n2,n3,main1,main2,main3,dev1,dev2,dev3");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("10,"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["count", "--set", "all"]).status.code(), Some(2));
    assert_eq!(bin(&["classify", "--tau", "1,2,3"]).status.code(), Some(2));
    assert_eq!(bin(&["j", "--tau", "0,1,1,1", "--terms", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--suite", "nothing"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_planar-lattices"))
        .args(["count", "--set", "all", "--max-height", "10"])
        .env("PLANAR_SIEVE_BOUND", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sieve bound"));
}
