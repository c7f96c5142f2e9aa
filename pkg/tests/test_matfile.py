import numpy as np
import pytest
from numpy.testing import assert_allclose

from quditcorr import MatrixFileError, parse_matrix_file, random_density, write_matrix_file


def _entries(rho):
    return "".join(f"{v.real} {v.imag}\n" for v in np.asarray(rho).ravel())


def test_parse_bipartite(tmp_path):
    path = tmp_path / "mixed.mat"
    path.write_text("2 2\n" + _entries(np.eye(4) / 4))
    rho, da, db = parse_matrix_file(path)
    assert (da, db) == (2, 2)
    assert_allclose(rho, np.eye(4) / 4, atol=0)


def test_parse_single_system(tmp_path):
    path = tmp_path / "single.mat"
    path.write_text("3 0\n" + _entries(np.eye(3) / 3))
    rho, da, db = parse_matrix_file(path)
    assert (da, db) == (3, 0)
    assert rho.shape == (3, 3)


def test_comments_and_blanks_ignored(tmp_path):
    path = tmp_path / "commented.mat"
    body = _entries(np.eye(4) / 4).splitlines()
    text = "# density matrix\n\n2 2\n" + "\n# middle\n".join(body) + "\n"
    path.write_text(text)
    rho, _, _ = parse_matrix_file(path)
    assert_allclose(rho, np.eye(4) / 4, atol=0)


def test_missing_entries_reports_count(tmp_path):
    path = tmp_path / "short.mat"
    path.write_text("2 2\n" + "0 0\n" * 15)
    with pytest.raises(MatrixFileError, match="expected 16 entries"):
        parse_matrix_file(path)


def test_extra_entries_rejected(tmp_path):
    path = tmp_path / "long.mat"
    path.write_text("2 0\n" + "0 0\n" * 5)
    with pytest.raises(MatrixFileError, match="line 6"):
        parse_matrix_file(path)


def test_non_numeric_token_names_line(tmp_path):
    path = tmp_path / "bad.mat"
    path.write_text("2 0\n1 0\n0 zero\n0 0\n1 0\n")
    with pytest.raises(MatrixFileError, match="line 3"):
        parse_matrix_file(path)


def test_malformed_entry_rejected(tmp_path):
    path = tmp_path / "triple.mat"
    path.write_text("2 0\n1 0 0\n0 0\n0 0\n1 0\n")
    with pytest.raises(MatrixFileError, match="re im"):
        parse_matrix_file(path)


@pytest.mark.parametrize("header", ["2", "2 2 2", "x 2", "0 2", "2 -1", ""])
def test_malformed_header_rejected(tmp_path, header):
    path = tmp_path / "hdr.mat"
    path.write_text(header + "\n1 0\n")
    with pytest.raises(MatrixFileError):
        parse_matrix_file(path)


def test_scientific_notation(tmp_path):
    path = tmp_path / "sci.mat"
    path.write_text("2 0\n5e-1 0\n0 -2.5E-1\n0 2.5e-1\n0.5 0\n")
    rho, _, _ = parse_matrix_file(path)
    assert_allclose(rho, np.array([[0.5, -0.25j], [0.25j, 0.5]]), atol=0)


def test_write_parse_round_trip(tmp_path):
    rho = random_density(6, 42)
    path = tmp_path / "rt.mat"
    write_matrix_file(path, rho, 2, 3)
    back, da, db = parse_matrix_file(path)
    assert (da, db) == (2, 3)
    assert np.array_equal(back, rho)


def test_write_rejects_shape_mismatch(tmp_path):
    with pytest.raises(ValueError):
        write_matrix_file(tmp_path / "bad.mat", np.eye(4), 2, 3)
