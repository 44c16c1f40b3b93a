mod common;

use std::fs;
use std::io::Cursor;

use genus_core::survey::{survey_catalog, survey_line, Checkpoint};
use genus_core::{
    emit_report, run_survey, survey_file, ReportFormat, SurveyError, SurveyOptions, SurveyTarget,
};

fn opts() -> SurveyOptions {
    SurveyOptions {
        batch: 7,
        ..Default::default()
    }
}

#[test]
fn census_small_orders() {
    for (n, non_real, total) in [(8, 0, 5), (10, 1, 19), (12, 5, 85)] {
        let (summary, records) = survey_catalog(&common::catalog(n), &opts()).unwrap();
        let c = summary.by_order[&n];
        assert_eq!((c.non_real, c.total), (non_real, total), "order {n}");
        assert_eq!(c.non_log_concave, 0);
        assert!(c.cone_violation <= c.non_real);
        assert!(records.iter().all(|r| r.distribution.total() == 1u128 << n));
    }
}

#[test]
fn order_sixteen_record_for_petersen_8_2() {
    let line = genus_core::write_graph6(&genus_core::generalized_petersen(8, 2).unwrap()).unwrap();
    let r = survey_line(1, &line, &opts()).unwrap();
    assert!(!r.real_rooted && r.cone_violation && r.non_lc_quadratic && r.log_concave);
    assert_eq!(r.distribution.counts(), &[2, 84, 2074, 23536, 39840]);
}

#[test]
fn output_is_independent_of_workers_and_batch() {
    let text = fs::read_to_string(common::catalog(12)).unwrap();
    let render = |workers, batch| {
        let o = SurveyOptions {
            workers: Some(workers),
            batch,
            ..Default::default()
        };
        let (_, records) = run_survey(Cursor::new(text.as_bytes()), &o).unwrap();
        let mut out = Vec::new();
        emit_report(&records, ReportFormat::JsonLines, &mut out).unwrap();
        out
    };
    let base = render(1, 1);
    assert_eq!(render(3, 5), base);
    assert_eq!(render(2, 1000), base);
}

fn full_run(format: ReportFormat, catalog: &std::path::Path, dir: &std::path::Path) -> Vec<u8> {
    let report = dir.join(format!("full.{format}"));
    survey_file(
        &SurveyTarget {
            catalog,
            report: &report,
            format,
            checkpoint: None,
            resume: false,
        },
        &opts(),
    )
    .unwrap();
    fs::read(report).unwrap()
}

#[test]
fn interrupted_and_resumed_run_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = common::catalog(12);
    for format in [ReportFormat::Csv, ReportFormat::JsonLines] {
        let expected = full_run(format, &catalog, dir.path());
        let report = dir.path().join(format!("resumed.{format}"));
        let checkpoint = dir.path().join(format!("resumed.{format}.ckpt"));
        let target = SurveyTarget {
            catalog: &catalog,
            report: &report,
            format,
            checkpoint: Some(&checkpoint),
            resume: true,
        };
        // Stop after 10 lines, then simulate a crash that left a partial tail.
        let first = SurveyOptions {
            max_lines: Some(10),
            ..opts()
        };
        let partial = survey_file(&target, &first).unwrap();
        assert_eq!(partial.total_graphs(), 10);
        let mut f = fs::OpenOptions::new().append(true).open(&report).unwrap();
        std::io::Write::write_all(&mut f, b"garbage from a killed writer").unwrap();
        drop(f);

        let second = SurveyOptions {
            max_lines: Some(30),
            ..opts()
        };
        survey_file(&target, &second).unwrap();
        let summary = survey_file(&target, &opts()).unwrap();
        assert_eq!(fs::read(&report).unwrap(), expected, "{format}");
        assert_eq!(summary.by_order[&12].total, 85);
        assert_eq!(summary.by_order[&12].non_real, 5);

        // Resuming a completed run changes nothing.
        let again = survey_file(&target, &opts()).unwrap();
        assert_eq!(again, summary);
        assert_eq!(fs::read(&report).unwrap(), expected);
        let cp = Checkpoint::load(&checkpoint).unwrap();
        assert_eq!(cp.lines_done, 85);
        assert_eq!(cp.report_bytes, expected.len() as u64);
    }
}

#[test]
fn resume_against_modified_catalog_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("catalog.g6");
    fs::copy(common::catalog(10), &catalog).unwrap();
    let report = dir.path().join("out.csv");
    let checkpoint = dir.path().join("out.ckpt");
    let target = SurveyTarget {
        catalog: &catalog,
        report: &report,
        format: ReportFormat::Csv,
        checkpoint: Some(&checkpoint),
        resume: true,
    };
    survey_file(
        &target,
        &SurveyOptions {
            max_lines: Some(4),
            ..opts()
        },
    )
    .unwrap();
    let mut text = fs::read_to_string(&catalog).unwrap();
    text.push_str("C~\n");
    fs::write(&catalog, text).unwrap();
    assert!(matches!(
        survey_file(&target, &opts()),
        Err(SurveyError::CheckpointMismatch { .. })
    ));
}

#[test]
fn io_errors_carry_line_numbers() {
    let bytes: &[u8] = b"C~\n\xff\xfe\n";
    match run_survey(Cursor::new(bytes), &opts()) {
        Err(SurveyError::Io { line, .. }) => assert_eq!(line, 2),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn empty_catalog_gives_header_only_report() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("empty.g6");
    fs::write(&catalog, "").unwrap();
    let report = dir.path().join("empty.csv");
    let summary = survey_file(
        &SurveyTarget {
            catalog: &catalog,
            report: &report,
            format: ReportFormat::Csv,
            checkpoint: None,
            resume: false,
        },
        &opts(),
    )
    .unwrap();
    assert!(summary.is_empty());
    assert_eq!(
        fs::read_to_string(report).unwrap(),
        "graph6,n,coefficients,log_concave,real_rooted,cone_violation,non_lc_quadratic\n"
    );
}
