import logging

import pytest

from conftest import TEXTBOOK_PAIRS

from unelgamal import cli
from unelgamal.config import EFFORT_CAP_ENV

TEXTBOOK_KEYGEN = ['keygen', '--exact-p', '29', '--exact-a', '4', '--exact-r1', '3',
                   '--insecure-deterministic']


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def keys(tmp_path, capsys):
    pub, priv = tmp_path / 'key.pub', tmp_path / 'key'
    assert cli.main(TEXTBOOK_KEYGEN + ['--pub', str(pub), '--priv', str(priv)]) == 0
    capsys.readouterr()
    return pub, priv


def _run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# keygen ======================================================================

def test_keygen_textbook_key(tmp_path, capsys):
    pub, priv = tmp_path / 'key.pub', tmp_path / 'key'
    code, out, _ = _run(capsys, *TEXTBOOK_KEYGEN, '--pub', pub, '--priv', priv)
    assert code == 0
    assert out.splitlines() == ['n=29', 'bits=5', 'generator=3', 'public key: (3, 23, 29)']
    assert pub.read_text() == 'UN-ELGAMAL PUBLIC v1\nn=29\np=29\nm=1\ndoubled=0\nr1=3\nr2=23\n'
    assert priv.read_text() == 'UN-ELGAMAL PRIVATE v1\nn=29\np=29\nm=1\ndoubled=0\na=4\n'


def test_keygen_seed_is_reproducible(tmp_path, capsys):
    outputs = []
    for name in ('first', 'second'):
        path = tmp_path / name
        code, out, err = _run(capsys, 'keygen', '--p-bits', 16, '--m', 2, '--doubled',
                              '--seed', 7, '--insecure-deterministic', '--pub', path)
        assert code == 0
        assert 'NOT secret' in err
        outputs.append((out, path.read_text()))
    assert outputs[0] == outputs[1]


def test_keygen_doubled_modulus_classifies(capsys):
    code, out, _ = _run(capsys, 'keygen', '--p-bits', 16, '--m', 2, '--doubled')
    assert code == 0
    n = int(out.splitlines()[0].split('=')[1])
    code, out, _ = _run(capsys, 'classify', n)
    assert code == 0
    assert out.startswith('cyclic: 2p^m, p=')
    assert out.endswith(', m=2\n')
    p = int(out.split('p=')[1].split(',')[0])
    assert p.bit_length() == 16
    assert n == 2 * p * p


@pytest.mark.parametrize('argv', [
    ['keygen', '--p-bits', '16', '--seed', '7'],
    ['keygen', '--exact-p', '29', '--exact-a', '4'],
    ['keygen', '--exact-a', '4', '--insecure-deterministic'],
    ['keygen', '--exact-p', '28', '--insecure-deterministic'],
    TEXTBOOK_KEYGEN[:-1] + ['--exact-r1', '4', '--insecure-deterministic'],
])
def test_keygen_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert 'error: ' in err


# encrypt and decrypt =========================================================

def test_textbook_encrypt_decrypt(keys, tmp_path, capsys):
    pub, priv = keys
    ct = tmp_path / 'msg.ct'
    code, _, err = _run(capsys, 'encrypt', '--pub', pub, '--message', 'I like math',
                        '--paper-mode', '--k', 5, '--out', ct)
    assert code == 0
    assert 'fixed k=5' in err
    lines = ct.read_text().splitlines()
    assert lines[:3] == ['UN-ELGAMAL CT v1', 'blocks=9', 'pad=0']
    assert lines[3:] == [f'c1={c1} c2={c2}' for c1, c2 in TEXTBOOK_PAIRS]

    code, out, _ = _run(capsys, 'decrypt', '--priv', priv, '--in', ct, '--show-blocks')
    assert code == 0
    assert out.splitlines() == ['08 11 08 10 04 12 00 19 07', 'ILIKEMATH']


def test_encrypt_to_stdout_from_file(keys, tmp_path, capsys):
    pub, priv = keys
    message = tmp_path / 'message.txt'
    message.write_text('hello\n')
    code, out, _ = _run(capsys, 'encrypt', '--pub', pub, '--in', message)
    assert code == 0
    assert out.startswith('UN-ELGAMAL CT v1\nblocks=5\npad=0\n')

    ct = tmp_path / 'msg.ct'
    ct.write_text(out)
    assert _run(capsys, 'decrypt', '--priv', priv, '--in', ct)[1] == 'HELLO\n'


def test_encrypt_seed_gives_same_ciphertext(keys, capsys):
    pub, _ = keys
    argv = ['encrypt', '--pub', pub, '--message', 'abc', '--seed', 3, '--insecure-deterministic']
    assert _run(capsys, *argv)[1] == _run(capsys, *argv)[1]


@pytest.mark.parametrize('extra', [
    ['--paper-mode'],
    ['--k', '5'],
    ['--paper-mode', '--k', '0'],
    ['--seed', '3'],
])
def test_encrypt_usage_errors(keys, capsys, extra):
    pub, _ = keys
    assert _run(capsys, 'encrypt', '--pub', pub, '--message', 'abc', *extra)[0] == cli.EXIT_USAGE


def test_encrypt_unsupported_character(keys, capsys):
    pub, _ = keys
    code, _, err = _run(capsys, 'encrypt', '--pub', pub, '--message', 'café')
    assert code == cli.EXIT_CODEC
    assert "unsupported character 'é' at position 3" in err


def test_encrypt_message_file_that_is_not_utf8(keys, tmp_path, capsys):
    pub, _ = keys
    message = tmp_path / 'message.txt'
    message.write_bytes(b'caf\xe9\n')
    code, out, err = _run(capsys, 'encrypt', '--pub', pub, '--in', message)
    assert code == cli.EXIT_CODEC
    assert out == ''
    assert 'at position 3' in err


def test_encrypt_empty_message(keys, tmp_path, capsys):
    pub, priv = keys
    ct = tmp_path / 'empty.ct'
    assert _run(capsys, 'encrypt', '--pub', pub, '--message', '', '--out', ct)[0] == 0
    assert ct.read_text() == 'UN-ELGAMAL CT v1\nblocks=0\npad=0\n'
    assert _run(capsys, 'decrypt', '--priv', priv, '--in', ct)[:2] == (0, '\n')


def test_round_trip_under_generated_key(tmp_path, capsys):
    pub, priv, ct = tmp_path / 'key.pub', tmp_path / 'key', tmp_path / 'msg.ct'
    assert _run(capsys, 'keygen', '--p-bits', 16, '--pub', pub, '--priv', priv)[0] == 0
    assert _run(capsys, 'encrypt', '--pub', pub, '--message', 'Attack at dawn', '--out', ct)[0] == 0
    assert _run(capsys, 'decrypt', '--priv', priv, '--in', ct)[:2] == (0, 'ATTACKATDAWN\n')


def test_decrypt_invalid_block(keys, tmp_path, capsys):
    _, priv = keys
    # decrypts to 26, which is not a letter code
    ct = tmp_path / 'bad.ct'
    ct.write_text('UN-ELGAMAL CT v1\nblocks=1\npad=0\nc1=11 c2=12\n')
    assert _run(capsys, 'decrypt', '--priv', priv, '--in', ct)[0] == cli.EXIT_INVALID_BLOCK


def test_decrypt_malformed_ciphertext(keys, tmp_path, capsys):
    _, priv = keys
    ct = tmp_path / 'bad.ct'
    ct.write_text('UN-ELGAMAL CT v1\nblocks=2\npad=0\nc1=11 c2=12\n')
    code, _, err = _run(capsys, 'decrypt', '--priv', priv, '--in', ct)
    assert code == cli.EXIT_MALFORMED
    assert 'unexpected end of file' in err


def test_malformed_key_file(tmp_path, capsys):
    pub = tmp_path / 'key.pub'
    pub.write_text('not a key\n')
    assert _run(capsys, 'attack', '--pub', pub)[0] == cli.EXIT_MALFORMED


def test_missing_file(tmp_path, capsys):
    code = _run(capsys, 'encrypt', '--pub', tmp_path / 'nope', '--message', 'abc')[0]
    assert code == cli.EXIT_IO


# dlog, classify, powers, attack ==============================================

@pytest.mark.parametrize('alg', ['bsgs', 'brute'])
def test_dlog(capsys, alg):
    code, out, _ = _run(capsys, 'dlog', '--base', 3, '--target', 23, '--n', 29, '--alg', alg)
    assert (code, out) == (0, f'4 ({alg})\n')


def test_dlog_small_prime(capsys):
    assert _run(capsys, 'dlog', '--base', 3, '--target', 13, '--n', 17)[:2] == (0, '4 (bsgs)\n')


def test_dlog_non_generator_base(capsys):
    code, out, err = _run(capsys, 'dlog', '--base', 4, '--target', 16, '--n', 29)
    assert (code, out) == (0, '2 (bsgs)\n')
    assert 'order 14' in err


def test_dlog_not_in_subgroup(capsys):
    assert _run(capsys, 'dlog', '--base', 4, '--target', 2, '--n', 29)[0] == cli.EXIT_NOT_IN_SUBGROUP


@pytest.mark.parametrize('n', [12, 4, 2])
def test_dlog_needs_a_supported_modulus(capsys, n):
    assert _run(capsys, 'dlog', '--base', 1, '--target', 1, '--n', n)[0] == cli.EXIT_USAGE


def test_dlog_effort_cap(capsys):
    argv = ['dlog', '--base', 3, '--target', 23, '--n', 29, '--effort-cap', 2]
    assert _run(capsys, *argv)[0] == cli.EXIT_CAP


def test_effort_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(EFFORT_CAP_ENV, '2')
    assert _run(capsys, 'dlog', '--base', 3, '--target', 23, '--n', 29)[0] == cli.EXIT_CAP
    monkeypatch.setenv(EFFORT_CAP_ENV, 'lots')
    assert _run(capsys, 'dlog', '--base', 3, '--target', 23, '--n', 29)[0] == cli.EXIT_USAGE


@pytest.mark.parametrize('n, expected', [
    (29, 'cyclic: p^m, p=29, m=1'),
    (18, 'cyclic: 2p^m, p=3, m=2'),
    (12, 'not cyclic'),
    (4, 'cyclic: small'),
])
def test_classify(capsys, n, expected):
    assert _run(capsys, 'classify', n)[:2] == (0, expected + '\n')


def test_classify_rejects_small_n(capsys):
    assert _run(capsys, 'classify', 1)[0] == cli.EXIT_USAGE


def test_powers(capsys):
    code, out, _ = _run(capsys, 'powers', '--base', 3, '--n', 17)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 16
    assert lines[0] == '0 1'
    assert lines[4] == '4 13'


def test_attack(keys, capsys):
    pub, _ = keys
    assert _run(capsys, 'attack', '--pub', pub)[:2] == (0, '4\n')
    assert _run(capsys, 'attack', '--pub', pub, '--alg', 'brute')[:2] == (0, '4\n')


# bench =======================================================================

def test_bench_to_stdout(capsys):
    code, out, _ = _run(capsys, 'bench', '--p-bits', '12,16', '--trials', 3, '--seed', 1,
                        '--omit-timing')
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == 'group_order,algorithm,bits,elapsed_s,group_ops,solution'
    assert len(lines) == 1 + 6 + 1
    assert all(',bsgs,' in line and ',0.000000,' in line for line in lines[1:-1])
    assert lines[-1].startswith('# slope: ')


def test_bench_slope(capsys):
    code, out, _ = _run(capsys, 'bench', '--p-bits', '12,16,20,24', '--trials', 5, '--seed', 1)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 1 + 20 + 1
    assert 0.4 <= float(lines[-1].split(': ')[1]) <= 0.6


def test_bench_seed_repeats_all_but_timing(capsys):
    def without_timing(out):
        rows = [line.split(',') for line in out.splitlines() if not line.startswith('#')]
        return [row[:3] + row[4:] for row in rows]

    argv = ['bench', '--p-bits', '12,14', '--trials', 3, '--seed', 8]
    first, second = _run(capsys, *argv)[1], _run(capsys, *argv)[1]
    assert len(without_timing(first)) == 1 + 6
    assert without_timing(first) == without_timing(second)


def test_bench_files_are_reproducible(tmp_path, capsys):
    tables = []
    for name in ('a.csv', 'b.csv'):
        path = tmp_path / name
        code, out, _ = _run(capsys, 'bench', '--p-bits', '12,14', '--trials', 2, '--seed', 5,
                            '--omit-timing', '--workers', 2, '--out', path)
        assert code == 0
        assert out.startswith('slope=')
        tables.append(path.read_text())
    assert tables[0] == tables[1]


def test_bench_without_trials(capsys):
    code, out, _ = _run(capsys, 'bench', '--trials', 0)
    assert code == 0
    assert out == 'group_order,algorithm,bits,elapsed_s,group_ops,solution\n# slope: n/a\n'


@pytest.mark.parametrize('bits', ['2', 'x', ''])
def test_bench_rejects_bad_bit_sizes(capsys, bits):
    assert _run(capsys, 'bench', '--p-bits', bits)[0] == cli.EXIT_USAGE


# parser ======================================================================

def test_missing_subcommand(capsys):
    assert _run(capsys)[0] == cli.EXIT_USAGE


def test_help(capsys):
    code, out, _ = _run(capsys, '--help')
    assert code == 0
    assert 'un-elgamal' in out
