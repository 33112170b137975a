use std::fs;

use picard_core::weyl::{generate_group, generator_matrices};
use picard_verify::{cache_group, load_group, load_or_generate, CacheError, CacheSource};

#[test]
fn round_trip_of_the_full_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weyl.cache");
    let g = generate_group(&generator_matrices()).unwrap();
    cache_group(&path, &g).unwrap();
    let back = load_group(&path).unwrap();
    assert_eq!(back.order(), 51840);
    assert_eq!(back.elements(), g.elements());
    assert_eq!(back.generators(), g.generators());
    assert!(fs::read(&path).unwrap().starts_with(b"picard-weyl-cache v1\nsha256 "));
}

#[test]
fn truncated_file_fails_the_checksum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weyl.cache");
    cache_group(&path, &generate_group(&generator_matrices()).unwrap()).unwrap();
    let bytes = fs::read(&path).unwrap();
    fs::write(&path, &bytes[..bytes.len() - 1000]).unwrap();
    assert!(matches!(load_group(&path), Err(CacheError::Checksum { .. })));
}

#[test]
fn flipped_byte_fails_the_checksum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weyl.cache");
    cache_group(&path, &generate_group(&generator_matrices()).unwrap()).unwrap();
    let mut bytes = fs::read(&path).unwrap();
    let k = bytes.len() / 2;
    bytes[k] ^= 1;
    fs::write(&path, bytes).unwrap();
    assert!(matches!(load_group(&path), Err(CacheError::Checksum { .. })));
}

#[test]
fn missing_then_present_then_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub").join("weyl.cache");

    let cold = load_or_generate(Some(&path)).unwrap();
    assert_eq!(cold.source, CacheSource::Stored);
    assert!(cold.generate.is_some() && cold.load.is_some());

    let warm = load_or_generate(Some(&path)).unwrap();
    assert_eq!(warm.source, CacheSource::Loaded);
    assert_eq!(warm.group.elements(), cold.group.elements());

    let bytes = fs::read(&path).unwrap();
    fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
    let again = load_or_generate(Some(&path)).unwrap();
    assert!(matches!(again.source, CacheSource::Regenerated(ref why) if why.contains("checksum")));
    assert_eq!(again.group.order(), 51840);
    assert_eq!(load_group(&path).unwrap().elements(), cold.group.elements());
}

#[test]
fn no_path_generates_in_memory() {
    let g = load_or_generate(None).unwrap();
    assert_eq!(g.source, CacheSource::Generated);
    assert!(g.load.is_none());
}
