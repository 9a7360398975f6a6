use std::process::{Command, Output};

use homquiver_cli::schema::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn homquiver(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homquiver"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(args: &str) -> String {
    let out = homquiver(args);
    assert_eq!(out.status.code(), Some(0), "{args}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses into the typed schema and checks that reserializing reproduces the bytes.
fn round_trip<T: Serialize + DeserializeOwned>(args: &str) -> T {
    let text = stdout(args);
    let v: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{args}");
    v
}

#[test]
fn roots_listing() {
    let r: RootsOut = round_trip("roots --series A --rank 3 --output json");
    assert_eq!(r.positive_roots.len(), 6);
    assert_eq!(r.cartan[0], vec![2, -1, 0]);
    assert!(r.positive_roots.iter().all(|w| w.weight2.len() == 4));
    assert!(stdout("roots --series E --rank 8").starts_with("E8: 120 positive roots"));
    let d: RootsOut = round_trip("roots --series D --rank 5 --output json");
    assert_eq!(d.positive_roots.len(), 20);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        "roots --series B --rank 2",
        "roots --series E --rank 9",
        "simplicity --series A --rank 3 --parabolic 0",
        "simplicity --series A --rank 3 --parabolic 5",
        "simplicity --series E --rank 7 --parabolic all",
        "quiver --series A --rank 3 --parabolic all",
        "roots --series A --rank 3 --output dot",
        "king --series A --rank 2 --parabolic 1,2 --polarization 0,1",
        "king --series A --rank 2 --parabolic 1,2 --polarization 1,2,3",
        "cone --series A --rank 3 --boundary",
        "cone --series A --rank 2 --parabolic 1,2 --grid 3 --section 4",
    ] {
        let out = homquiver(args);
        assert_eq!(out.status.code(), Some(2), "{args}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_exceeded_exits_4() {
    let out = homquiver("intersections --series E --rank 8");
    assert_eq!(out.status.code(), Some(4));
    let out = homquiver("cone --series A --rank 4 --budget 10");
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn simplicity_verdicts() {
    let all: SimplicityList = round_trip("simplicity --series A --rank 5 --parabolic all --output json");
    assert_eq!(all.results.len(), 31);
    assert!(all.results.iter().all(|r| r.verdict == homquiver::Verdict::Simple));
    assert!(all.results.iter().all(|r| r.dominant_sums == vec![vec![0; 6]]));
    for args in [
        "simplicity --series E --rank 7 --parabolic borel",
        "simplicity --series D --rank 4 --parabolic 1",
    ] {
        assert!(stdout(args).contains(" SIMPLE\n"));
    }
}

#[test]
fn cone_quadratics_and_boundary() {
    let c: ConeOut = round_trip("cone --series A --rank 2 --parabolic 1,2");
    let polys: Vec<&str> = c.inequalities.iter().map(|i| i.polynomial.as_str()).collect();
    assert_eq!(polys, ["-4a^2 + 2ab + 5b^2", "5a^2 + 2ab - 4b^2"]);
    assert_eq!(c.inequalities[0].monomials[0], MonomialOut { exps: vec![2, 0], coeff: -4 });
    assert_eq!(c.canonical, vec![2, 2]);

    let b: ConeOut = round_trip("cone --series A --rank 4 --parabolic 1,4 --boundary");
    let lower = b.boundary.unwrap().lower.unwrap();
    assert_eq!((lower.p, lower.q, lower.r, lower.s), (-2, 2, 77, 19));
    let m4 = (-2.0 + 2.0 * 77f64.sqrt()) / 19.0;
    assert!((lower.approx - m4).abs() < 1e-12);
}

#[test]
fn cone_grid_and_section_csv() {
    let grid = stdout("cone --series A --rank 3 --parabolic borel --grid 8");
    let mut rd = csv::Reader::from_reader(grid.as_bytes());
    assert_eq!(rd.headers().unwrap(), vec!["a", "b", "c", "verdict"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 512);
    let stable = rows.iter().find(|r| &r[0] == "2" && &r[1] == "2" && &r[2] == "2").unwrap();
    assert_eq!(&stable[3], "STABLE");

    let section = stdout("cone --series A --rank 2 --parabolic 1,2 --section 11");
    let rows: Vec<String> = section.lines().skip(1).map(str::to_string).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0], "1,10,UNSTABLE");
    assert_eq!(rows[5], "6,5,STABLE");
}

#[test]
fn intersection_table_csv() {
    let csv_text = stdout("intersections --series A --rank 3 --parabolic borel");
    let lines: Vec<&str> = csv_text.lines().collect();
    assert_eq!(lines[0], "a,b,c,value");
    assert!(lines.contains(&"1,4,1,2"));
    assert!(lines.contains(&"3,2,1,1"));
    assert!(!lines.iter().skip(1).any(|l| l.ends_with(",0")));
    let j: IntersectionsOut = round_trip("intersections --series A --rank 3 --output json");
    assert_eq!(j.rows.len(), lines.len() - 1);
}

#[test]
fn reduced_a3_quiver_dot() {
    let dot = stdout("quiver --series A --rank 3 --parabolic borel --mode reduced --output dot");
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (6, 6));
    assert!(dot.starts_with("digraph quiver {"));
}

#[test]
fn quiver_json_schema() {
    let q: QuiverOut = round_trip("quiver --series A --rank 3 --output json");
    assert_eq!(q.vertices.len(), 6);
    assert!(q.vertices.iter().all(|v| v.dim == 1));
    assert!(q.arrows.iter().all(|a| a.scalar.is_some_and(|s| s.abs() <= 1)));
    let levi: QuiverOut = round_trip("quiver --series D --rank 4 --parabolic 2 --levi --output json");
    // One vertex per irreducible summand, each with multiplicity one.
    let dims: Vec<usize> = levi.vertices.iter().map(|v| v.dim).collect();
    assert_eq!(dims, vec![1, 1]);
    assert_eq!(levi.arrows.len(), 1);
}

#[test]
fn king_verdicts() {
    let text = stdout("king --series A --rank 2 --parabolic 1,2 --polarization 1,10");
    assert!(text.starts_with("UNSTABLE\nwitness "));
    let k: KingOut = round_trip("king --series A --rank 2 --parabolic 1,2 --polarization 1,10 --output json");
    assert!(!k.semistable);
    assert!(k.witness.is_some());
    assert_eq!(k.cone, homquiver::ConeVerdict::Unstable);
    let k: KingOut = round_trip("king --series A --rank 2 --parabolic 1,2 --polarization 1,1 --output json");
    assert!(k.stable && k.witness.is_none());
    assert_eq!(k.sigma.iter().sum::<i128>(), 0);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        "cone --series A --rank 3 --parabolic 1,3 --output json",
        "quiver --series D --rank 4 --output dot",
        "intersections --series A --rank 3 --parabolic 1,2",
    ] {
        assert_eq!(homquiver(args).stdout, homquiver(args).stdout, "{args}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("homquiver-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("roots.json");
    let out = homquiver(&format!("roots --series A --rank 2 --output json --out {}", path.display()));
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: RootsOut = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.positive_roots.len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}
