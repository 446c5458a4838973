use std::fs;

use linkweave::construct::{
    asset_names, data_dir, load_curated, load_curated_from, regenerate_assets, validate_asset, ConstructError,
};
use tempfile::TempDir;

#[test]
fn shipped_assets_validate() {
    for name in asset_names() {
        let asset = load_curated(name).unwrap();
        let out = validate_asset(&asset).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(out.label, asset.expected.label);
    }
}

#[test]
fn regeneration_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    regenerate_assets(dir.path()).unwrap();
    let shipped = data_dir();
    for entry in fs::read_dir(&shipped).unwrap() {
        let name = entry.unwrap().file_name();
        let a = fs::read(shipped.join(&name)).unwrap();
        let b = fs::read(dir.path().join(&name)).unwrap();
        assert!(a == b, "{name:?} differs after regeneration");
    }
}

#[test]
fn tampered_asset_fails_validation() {
    let dir = TempDir::new().unwrap();
    regenerate_assets(dir.path()).unwrap();
    // Swap the G graphs of two assets of the same shape.
    fs::copy(dir.path().join("fig4-right.g.emb"), dir.path().join("fig4-left.g.emb")).unwrap();
    let asset = load_curated_from(dir.path(), "fig4-left").unwrap();
    match validate_asset(&asset) {
        Err(ConstructError::AssetValidationFailed { asset, .. }) => assert_eq!(asset, "fig4-left"),
        other => panic!("{other:?}"),
    }
    assert!(load_curated_from(dir.path(), "no-such-asset").is_err());
}
