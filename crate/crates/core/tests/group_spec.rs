use std::fs;
use std::path::PathBuf;

use sumorders::catalog::{
    build, load_group_spec, resolve_target, save_group_spec, CatalogError, GroupSpec,
};
use sumorders::permgrp::DEFAULT_MAX_ORDER;
use sumorders::psi::psi_of_group;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn q8_loads_from_fixture() {
    let q8 = load_group_spec(fixture("q8.json"), DEFAULT_MAX_ORDER).unwrap();
    assert_eq!(q8.name(), "Q8");
    assert_eq!(q8.order(), 8);
    assert_eq!(psi_of_group(&q8).psi, 27u32.into());
    assert_eq!(q8.center().order(), 2);
    let hist: Vec<(u64, u64)> = q8.order_histogram().iter().map(|(&d, &n)| (d, n)).collect();
    assert_eq!(hist, vec![(1, 1), (2, 1), (4, 6)]);
}

#[test]
fn round_trip_preserves_group_and_text() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["S4", "A5xC7", "SL2(3)", "C1"] {
        let g = build(id).unwrap();
        let path = dir.path().join(format!("{id}.json"));
        save_group_spec(&g, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let back = load_group_spec(&path, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(back.name(), id);
        assert_eq!(back.order(), g.order());
        assert_eq!(back.order_histogram(), g.order_histogram());

        let again = dir.path().join("again.json");
        save_group_spec(&back, &again).unwrap();
        assert_eq!(fs::read_to_string(&again).unwrap(), text);
    }
}

#[test]
fn canonical_text_layout() {
    let spec = GroupSpec {
        name: "S3".into(),
        degree: 3,
        generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
    };
    assert_eq!(
        spec.to_canonical_string(),
        "{\n  \"name\": \"S3\",\n  \"degree\": 3,\n  \"generators\": [\n    [1,0,2],\n    [1,2,0]\n  ]\n}\n"
    );
}

#[test]
fn bad_files_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");

    fs::write(&bad, "{\"name\": \"X\", \"degree\": 3,\n \"generators\": [[0, 0, 1]]}").unwrap();
    assert!(matches!(
        load_group_spec(&bad, 100),
        Err(CatalogError::Validation { index: 0, .. })
    ));

    fs::write(&bad, "{\"name\": \"X\", \"degree\": 3, \"generators\": [[1, 0, 2], [0, 1]]}").unwrap();
    assert!(matches!(
        load_group_spec(&bad, 100),
        Err(CatalogError::Validation { index: 1, .. })
    ));

    fs::write(&bad, "{\"name\": \"X\",\n  \"degree\": }").unwrap();
    assert!(matches!(
        load_group_spec(&bad, 100),
        Err(CatalogError::Malformed { line: 2, .. })
    ));

    fs::write(&bad, "{\"name\": \"X\", \"degree\": 1, \"generators\": [], \"extra\": 1}").unwrap();
    assert!(matches!(load_group_spec(&bad, 100), Err(CatalogError::Malformed { .. })));

    assert!(matches!(
        load_group_spec(dir.path().join("missing.json"), 100),
        Err(CatalogError::Io { .. })
    ));
}

#[test]
fn capacity_applies_to_files() {
    let path = fixture("q8.json");
    assert!(matches!(
        load_group_spec(&path, 4),
        Err(CatalogError::Group(sumorders::permgrp::GroupError::Capacity { limit: 4, .. }))
    ));
}

#[test]
fn targets_resolve_by_prefix_or_path() {
    assert_eq!(resolve_target("catalog:A5", DEFAULT_MAX_ORDER).unwrap().order(), 60);
    let path = fixture("q8.json");
    assert_eq!(
        resolve_target(path.to_str().unwrap(), DEFAULT_MAX_ORDER).unwrap().order(),
        8
    );
    assert!(matches!(
        resolve_target("catalog:Nope", DEFAULT_MAX_ORDER),
        Err(CatalogError::UnknownId(_))
    ));
}
