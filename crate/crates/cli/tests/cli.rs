//! End-to-end checks of the command-line surface: output formats, exit
//! codes and round-trips between commands.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kkr"))
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../fixtures");
    p.push(name);
    p.to_str().expect("utf-8 path").to_string()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

#[test]
fn rc2path_vertex_and_classical_agree() {
    let out = bin().args(["rc2path", "--rc", &fixture("sample_rc.json")]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "111*22*3*1*4*2*3");

    let out = bin()
        .args(["rc2path", "--rc", &fixture("sample_rc.json"), "--engine", "classical"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "111*22*3*1*4*2*3");
}

#[test]
fn rc2path_trace_lists_every_stage() {
    let out = bin()
        .args(["rc2path", "--rc", &fixture("sample_rc.json"), "--trace"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("p^(3) = 4"));
    assert!(text.contains("C_3   = 4:1"));
    assert!(text.contains("p^(2) = 33*4"));
    assert!(text.contains("C_2   = 3:1*34:3"));
    assert!(text.contains("p^(1) = 22*23*4*3"));
    assert!(text.contains("3 normal ordered forms"));
    assert!(text.ends_with("p = 111*22*3*1*4*2*3"));
}

#[test]
fn rc2path_vacuum() {
    let out = bin().args(["rc2path", "--rc", &fixture("vacuum_rc.json")]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "11");
}

#[test]
fn rc2path_rank_override_pads_levels() {
    // Same configuration read at rank 5: two extra empty levels, and the
    // image embeds unchanged.
    let out = bin()
        .args(["rc2path", "--rc", &fixture("sample_rc.json"), "--rank", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "111*22*3*1*4*2*3");
    let out = bin()
        .args(["rc2path", "--rc", &fixture("sample_rc.json"), "--rank", "2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn path2rc_state_and_round_trip() {
    let out = bin()
        .args(["path2rc", "--state", "1111223214322", "--rank", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json = stdout_of(&out);
    let expected = std::fs::read_to_string(fixture("thirteen_box_rc.json")).unwrap();
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&json).unwrap(),
        serde_json::from_str::<serde_json::Value>(&expected).unwrap()
    );

    // Feed the JSON back through rc2path via stdin.
    use std::io::Write;
    let mut child = bin()
        .args(["rc2path", "--rc", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(json.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1*1*1*1*2*2*3*2*1*4*3*2*2");
}

#[test]
fn path2rc_ascii_rendering() {
    let out = bin()
        .args(["path2rc", "--path", "111*22*3*1*4*2*3", "--rank", "3", "--ascii"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("mu^(1)"));
    assert!(text.contains("[][]"));
}

#[test]
fn path2rc_rejects_non_highest() {
    let out = bin().args(["path2rc", "--state", "21", "--rank", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2() {
    let out = bin().args(["path2rc", "--state", "1x1", "--rank", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bbs_evolve_matches_displayed_rows() {
    let t0 = "1111222211113321111411111111111111111111111";
    let out = bin()
        .args(["bbs", "evolve", "--state", t0, "--rank", "3", "--carrier", "5", "--steps", "7"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let lines: Vec<String> = stdout_of(&out).lines().map(|l| l.to_string()).collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], format!("t=0: {t0}"));
    assert_eq!(lines[1], "t=1: 1111111122221113321141111111111111111111111");
    assert_eq!(lines[7], "t=7: 1111111111111111111111112111113221111432211");
}

#[test]
fn bbs_evolve_steps_zero_echoes_input() {
    let out = bin()
        .args(["bbs", "evolve", "--state", "12211", "--rank", "1", "--carrier", "1", "--steps", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "t=0: 12211");
}

#[test]
fn bbs_evolve_json_and_csv() {
    let out = bin()
        .args([
            "bbs", "evolve", "--state", "2111", "--rank", "1", "--carrier", "1", "--steps", "1",
            "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["states"][1], "1211");

    let out = bin()
        .args([
            "bbs", "evolve", "--state", "2111", "--rank", "1", "--carrier", "1", "--steps", "1",
            "--format", "csv",
        ])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert!(text.starts_with("t,state"));
    assert!(text.ends_with("1,1211"));
}

#[test]
fn bbs_scatter_reports_soliton_word() {
    let t4 = "1111111111111111111122321432211111111111111";
    let out = bin()
        .args(["bbs", "scatter", "--state", t4, "--rank", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("solitons: [4, 3, 1]"));
    assert!(text.contains("2222"));
    assert!(text.contains("233"));
}

#[test]
fn bbs_action_angle_runs_clean() {
    let t0 = "1111222211113321111411111111111111111111111";
    let out = bin()
        .args([
            "bbs", "action-angle", "--state", t0, "--rank", "3", "--carrier", "2", "--steps", "4",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("t=0"));
    assert!(text.contains("mu^(1)=[4, 3, 1]"));
    assert!(!text.contains("violation"));
}

#[test]
fn selftest_quick_passes() {
    let out = bin().args(["selftest", "--level", "quick"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn selftest_filter_runs_one_suite() {
    let out = bin()
        .args(["selftest", "--level", "full", "--filter", "yang-baxter"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 1);
}

#[test]
fn color_env_var_controls_ansi_output() {
    let out = bin()
        .args(["bbs", "evolve", "--state", "211", "--rank", "1", "--carrier", "1", "--steps", "0"])
        .env("KKR_COLOR", "1")
        .output()
        .unwrap();
    assert!(stdout_of(&out).contains("\x1b["));
    let out = bin()
        .args(["bbs", "evolve", "--state", "211", "--rank", "1", "--carrier", "1", "--steps", "0"])
        .env("KKR_COLOR", "0")
        .output()
        .unwrap();
    assert!(!stdout_of(&out).contains("\x1b["));
}
