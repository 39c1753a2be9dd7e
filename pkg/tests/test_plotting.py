from thins.plotting import plot_counts, plot_hasse, plot_suite
from thins.poset import counts, thins_hasse
from thins.suite import SuiteConfig, run_lemma_suite

PNG = b"\x89PNG\r\n\x1a\n"


def test_hasse_png(tmp_path):
    out = plot_hasse(thins_hasse(3), tmp_path / "h.png", title="size 3")
    assert out.read_bytes().startswith(PNG)


def test_hasse_png_single_node(tmp_path):
    assert plot_hasse(thins_hasse(0), tmp_path / "h.png").read_bytes().startswith(PNG)


def test_counts_png(tmp_path):
    table = [(n, counts(n)) for n in range(1, 5)]
    assert plot_counts(table, tmp_path / "c.png").read_bytes().startswith(PNG)


def test_suite_png(tmp_path):
    reports = run_lemma_suite(SuiteConfig(max_size=1, sigs=("1x1",)))
    assert plot_suite(reports, tmp_path / "s.png").read_bytes().startswith(PNG)
