use std::path::Path;
use std::process::{Command, Output};

use linkweave::construct::{sabotage_fixture, GraphEmbedding};
use linkweave::graphs::OrientedTriangle;
use linkweave::linktable::TriangleLinkTable;
use tempfile::TempDir;

fn linkweave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkweave")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

fn report(dir: &Path, name: &str) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn build_pq_writes_two_embeddings() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().display().to_string();
    let o = linkweave(&["build", "pq", "--ell", "3", "--x", "1,1,1", "--y", "1,1,1", "--out", &out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["pq.g.emb", "pq.h.emb"] {
        let e = GraphEmbedding::from_text(&std::fs::read_to_string(dir.path().join(f)).unwrap()).unwrap();
        assert_eq!(e.order(), 4);
    }
    // Sizes default to ones.
    let o = linkweave(&["build", "pq", "--ell", "2", "--out", &out, "--prefix", "small"]);
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("small.h.emb").exists());
}

#[test]
fn bad_parameters_exit_two() {
    assert_eq!(code(&linkweave(&["build", "pq", "--ell", "1"])), 2);
    assert_eq!(code(&linkweave(&["build", "pq", "--ell", "3", "--x", "1,1"])), 2);
    assert_eq!(code(&linkweave(&["build", "star-cone", "--n", "5", "--star", "0|1|1 2 3"])), 2);
    assert_eq!(code(&linkweave(&["no-such-command"])), 2);
    assert_eq!(code(&linkweave(&["classify", "/nonexistent/table.txt"])), 2);
}

#[test]
fn star_cone_then_table_then_classify() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().display().to_string();
    let o = linkweave(&["build", "star-cone", "--n", "6", "--star", "0|1 2|3 4 5", "--out", &out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("6 linked triangles"), "{}", stdout(&o));
    assert!(dir.path().join("star-cone.curve").exists());

    let o = linkweave(&["build", "pq", "--ell", "3", "--x", "1,2,1", "--y", "2,1,1", "--out", &out]);
    assert_eq!(code(&o), 0);
    let table = path(dir.path(), "t.txt");
    let o = linkweave(&["table", &path(dir.path(), "pq.g.emb"), &path(dir.path(), "pq.h.emb"), "--out", &table]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rep = path(dir.path(), "classify.json");
    let o = linkweave(&["classify", &table, "--report", &rep]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(dir.path(), "classify.json");
    assert_eq!(r["status"], "Weak");
    assert_eq!(r["label"], "PQ");
}

#[test]
fn inconsistent_table_exits_four() {
    let dir = TempDir::new().unwrap();
    let mut t = TriangleLinkTable::zero(4, 4);
    t.set(&OrientedTriangle::of(0, 1, 2), &OrientedTriangle::of(0, 1, 2), 1);
    let file = path(dir.path(), "bad.txt");
    std::fs::write(&file, t.to_text()).unwrap();
    assert_eq!(code(&linkweave(&["classify", &file])), 4);
}

#[test]
fn verify_detects_sabotage_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (g, h) = sabotage_fixture();
    let (gp, hp) = (path(dir.path(), "g.emb"), path(dir.path(), "h.emb"));
    std::fs::write(&gp, g.to_text()).unwrap();
    std::fs::write(&hp, h.to_text()).unwrap();
    let mut texts = Vec::new();
    for name in ["a.json", "b.json"] {
        let rep = path(dir.path(), name);
        let o = linkweave(&["verify", &gp, &hp, "--report", &rep]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("Strong"));
        texts.push(std::fs::read(dir.path().join(name)).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let r = report(dir.path(), "a.json");
    assert_eq!(r["status"], "Strong");
    assert_eq!(r["witness"]["linking"].as_i64().unwrap().abs(), 2);
    assert!(r.get("timing_ms").is_none());

    let rep = path(dir.path(), "timed.json");
    assert_eq!(code(&linkweave(&["verify", &gp, &hp, "--report", &rep, "--timing"])), 0);
    assert!(report(dir.path(), "timed.json").get("timing_ms").is_some());
}

#[test]
fn large_orders_need_sampling() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().display().to_string();
    let o = linkweave(&["build", "pq", "--ell", "4", "--x", "2,2,2,2", "--y", "2,2,2,2", "--out", &out]);
    assert_eq!(code(&o), 0);
    let (gp, hp) = (path(dir.path(), "pq.g.emb"), path(dir.path(), "pq.h.emb"));
    assert_eq!(code(&linkweave(&["verify", &gp, &hp])), 6);
    let rep = path(dir.path(), "s.json");
    let o = linkweave(&["verify", &gp, &hp, "--sample", "2000", "--seed", "7", "--report", &rep]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(dir.path(), "s.json");
    assert_eq!(r["status"], "Inconclusive");
    assert_eq!(r["sampling"]["seed"], 7);
}

#[test]
fn self_intersecting_embedding_exits_three() {
    let dir = TempDir::new().unwrap();
    // Edge 0-1 passes through vertex 2.
    let g = "[vertices]\n0 0 0 0\n1 2 0 0\n2 1 0 0\n[edges]\n0 1 : 0 0 0 ; 2 0 0\n0 2 : 0 0 0 ; 1 0 0\n1 2 : 2 0 0 ; 1 0 0\n";
    let (gp, hp) = (path(dir.path(), "g.emb"), path(dir.path(), "h.emb"));
    std::fs::write(&gp, g).unwrap();
    let (_, h) = sabotage_fixture();
    std::fs::write(&hp, h.to_text()).unwrap();
    assert_eq!(code(&linkweave(&["verify", &gp, &hp])), 3);
    assert_eq!(code(&linkweave(&["table", &gp, &hp, "--out", &path(dir.path(), "t.txt")])), 3);
}

#[test]
fn assets_validate_passes() {
    let dir = TempDir::new().unwrap();
    let rep = path(dir.path(), "assets.json");
    let o = linkweave(&["assets-validate", "--report", &rep]);
    assert_eq!(code(&o), 0, "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    let r = report(dir.path(), "assets.json");
    assert_eq!(r["assets"].as_array().unwrap().len(), 6);
}

#[test]
fn data_directory_override() {
    let dir = TempDir::new().unwrap();
    linkweave::construct::regenerate_assets(dir.path()).unwrap();
    std::fs::copy(dir.path().join("fig3-right.g.emb"), dir.path().join("fig3-left.g.emb")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_linkweave"))
        .arg("assets-validate")
        .env(linkweave::construct::DATA_ENV, dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 3, "{}", stdout(&o));
    assert!(stdout(&o).contains("fig3-left: FAILED"));
}
