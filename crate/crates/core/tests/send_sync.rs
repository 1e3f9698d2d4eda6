use rkprofile::{
    CanonicalProfile, DecompositionReport, EnumerationResult, Enumerator, Error, Preorder,
    ProductDecomposition, QuotientPoset, RkProfile, ValidationReport,
};

fn assert_send_sync<T: Send + Sync>() {}

#[test]
fn public_types_are_thread_safe() {
    assert_send_sync::<Preorder>();
    assert_send_sync::<RkProfile>();
    assert_send_sync::<QuotientPoset>();
    assert_send_sync::<CanonicalProfile>();
    assert_send_sync::<ValidationReport>();
    assert_send_sync::<DecompositionReport>();
    assert_send_sync::<ProductDecomposition>();
    assert_send_sync::<EnumerationResult>();
    assert_send_sync::<Enumerator>();
    assert_send_sync::<Error>();
}
