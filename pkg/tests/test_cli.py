import json

import pytest

from orthomorph.cli import parse_config
from orthomorph.cli import run
from orthomorph.commands.util.config import Config


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv)
    return code, json.loads(out)


def test_fgt_prints_a_certificate(capsys):
    code, doc = invoke_json(capsys, 'fgt', '--group', 'Z7', '--k', '3')
    assert code == 0
    assert doc['kind'] == 'orthomorphism'
    assert doc['cycle_type'] == '1+3^2'
    assert doc['verified'] is True
    assert doc['seed'] == 0


def test_logs_stay_off_stdout(capsys):
    code, out, err = invoke(capsys, 'fgt', '--group', 'Z7', '--k', '3', '--seed', '5')
    assert code == 0
    assert json.loads(out)['seed'] == 5
    assert 'found' in err


def test_fgt_on_group_without_orthomorphism(capsys):
    code, doc = invoke_json(capsys, 'fgt', '--group', 'Z4', '--k', '3')
    assert code == 1
    assert doc['outcome'] == 'nonexistent'
    assert doc['group'] == 'Z4'


def test_fgt_out_of_budget(capsys):
    code, doc = invoke_json(capsys, 'fgt', '--group', 'Z13', '--k', '3', '--budget-nodes', '1')
    assert code == 2
    assert doc['outcome'] == 'unknown'


@pytest.mark.parametrize('argv', [
    ['fgt', '--group', 'Q8', '--k', '3'],
    ['fgt', '--group', 'Z7', '--k', '4'],
    ['fgt', '--group', 'Z7'],
    ['cycle-type', '--group', 'Z7', '--cycle-type', '2+5'],
    ['zerosum-partition', '--group', 'Z7'],
    ['sequence', '--group', 'Z7', '--elements', '1,9'],
    ['no-such-command'],
])
def test_bad_input_exits_64(capsys, argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == 64
    assert out == ''


def test_hall_paige(capsys):
    code, doc = invoke_json(capsys, 'hall-paige', '--group', 'Z4')
    assert code == 1
    assert doc == {"group": "Z4", "hall_paige": False}

    code, doc = invoke_json(capsys, 'hall-paige', '--group', 'Z2xZ2', '--search')
    assert code == 0
    assert doc == {"group": "Z2xZ2", "hall_paige": True, "orthomorphism": "found"}


def test_groups_of_order_eight(capsys):
    code, doc = invoke_json(capsys, 'groups', '--order', '8')
    assert code == 0
    assert len(doc['groups']) == 3
    assert [g['hall_paige'] for g in doc['groups']].count(True) == 2


def test_groups_as_csv(capsys):
    code, out, _ = invoke(capsys, 'groups', '--order', '4', '--format', 'csv')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'group,primary,hall_paige,image_2,image_3,two_three'
    assert len(lines) == 3


def test_verify_round_trip(capsys, tmp_path):
    path = tmp_path / 'z7.json'
    code, out, err = invoke(capsys, 'fgt', '--group', 'Z7', '--k', '3', '--out', str(path))
    assert code == 0 and out == ''
    assert str(path) in err

    code, doc = invoke_json(capsys, 'verify', str(path))
    assert code == 0
    assert doc == {"kind": "orthomorphism", "verdict": "pass", "problems": []}


def test_verify_rejects_a_corrupted_perm(capsys, tmp_path):
    path = tmp_path / 'z7.json'
    invoke(capsys, 'fgt', '--group', 'Z7', '--k', '3', '--out', str(path))
    doc = json.loads(path.read_text())
    doc['perm'][1], doc['perm'][2] = doc['perm'][2], doc['perm'][1]
    path.write_text(json.dumps(doc))

    code, result = invoke_json(capsys, 'verify', str(path))
    assert code == 1
    assert result['verdict'] == 'fail'
    assert result['problems']


def test_verify_rejects_a_bad_block_sum(capsys, tmp_path):
    path = tmp_path / 'partition.json'
    code, _, _ = invoke(capsys, 'zerosum-partition', '--group', 'Z7', '--sizes', '3,3', '--out', str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc['blocks'] == [[1, 2, 4], [3, 5, 6]]
    doc['block_sums'][0] = 1
    path.write_text(json.dumps(doc))

    code, result = invoke_json(capsys, 'verify', str(path))
    assert code == 1


def test_verify_rejects_non_certificates(capsys, tmp_path):
    path = tmp_path / 'junk.json'
    path.write_text('not json')
    assert invoke(capsys, 'verify', str(path))[0] == 64
    path.write_text('{"kind": "banana"}')
    assert invoke(capsys, 'verify', str(path))[0] == 64


def test_sequence_command(capsys):
    code, doc = invoke_json(capsys, 'sequence', '--group', 'Z7', '--elements', '1,2,4')
    assert code == 0
    assert doc['kind'] == 'sequence'
    assert sorted(doc['sequence']) == [1, 2, 4]
    assert doc['verified'] is True


def test_zerosum_partition_needs_one_mode(capsys):
    code, _, err = invoke(capsys, 'zerosum-partition', '--group', 'Z7', '--k', '3', '--sizes', '3,3')
    assert code == 64
    assert err


def test_matchable_command(capsys):
    code, doc = invoke_json(capsys, 'matchable', '--group', 'Z5', '--matrix', '1,-1,-1')
    assert code == 0
    assert doc['kind'] == 'matchability'
    code, doc = invoke_json(capsys, 'matchable', '--group', 'Z4', '--matrix', '1,-1,-1')
    assert code == 1


def test_sweep_prints_csv(capsys):
    code, out, _ = invoke(capsys, 'sweep', '--max-order', '3')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'group,n,k,outcome,witness_hash,nodes,reason'
    assert lines[1].startswith('Z2,2,,skipped,,0,')
    assert lines[2].startswith('Z3,3,2,found,')


def test_sweep_as_json(capsys):
    code, doc = invoke_json(capsys, 'sweep', '--max-order', '3', '--format', 'json')
    assert code == 0
    assert doc['passed'] is True
    assert doc['seed'] == 0


@pytest.mark.parametrize('argv', [
    ['sweep', '--max-order', '7'],
    ['sweep', '--max-order', '7', '--format', 'json'],
    ['fgt', '--group', 'Z7', '--k', '3'],
    ['fgt', '--group', 'Z3xZ3', '--k', '2'],
])
def test_default_runs_are_byte_identical(capsys, argv):
    code1, out1, _ = invoke(capsys, *argv)
    code2, out2, _ = invoke(capsys, *argv)
    assert code1 == code2
    assert out1
    assert out1 == out2


def test_sweep_output_does_not_depend_on_jobs(capsys):
    code1, out1, _ = invoke(capsys, 'sweep', '--max-order', '7', '--jobs', '1')
    code2, out2, _ = invoke(capsys, 'sweep', '--max-order', '7', '--jobs', '2')
    assert code1 == code2 == 0
    assert out1 == out2


def test_jobs_is_a_sweep_option(capsys):
    code, out, _ = invoke(capsys, 'fgt', '--group', 'Z7', '--k', '3', '--jobs', '2')
    assert code == 64
    assert out == ''



def test_config_overrides(capsys):
    code, doc = invoke_json(capsys, '--config', 'seed', '9', 'fgt', '--group', 'Z7', '--k', '2')
    assert code == 0
    assert doc['seed'] == 9
    code, doc = invoke_json(capsys, '--config', 'format', 'csv', 'hall-paige', '--group', 'Z5', '--format', 'json')
    assert doc['hall_paige'] is True


def test_config_file_is_read(capsys, isolated_config):
    isolated_config.write_text(json.dumps({"budget_nodes": 1}))
    code, doc = invoke_json(capsys, 'fgt', '--group', 'Z13', '--k', '3')
    assert code == 2
    assert doc['outcome'] == 'unknown'


def test_unreadable_config_file(capsys, isolated_config):
    isolated_config.write_text('{')
    code, _, err = invoke(capsys, 'groups', '--order', '2')
    assert code == 1
    assert err


def test_parse_config_defaults(isolated_config):
    obj = parse_config(config_file=str(isolated_config))
    assert obj['debug'] is False
    assert obj['config'].seed == 0
    assert obj['config'].budget_nodes == Config.DEFAULTS['budget_nodes']
    assert not isolated_config.exists()


def test_config_coerces_strings(isolated_config):
    config = Config(str(isolated_config), {"budget_nodes": "12", "budget_seconds": "1.5", "seed": "none"})
    assert config.budget_nodes == 12
    assert config.budget_seconds == 1.5
    assert config.seed is None


@pytest.mark.slow
def test_sweep_to_eleven(capsys):
    argv = ['sweep', '--max-order', '11', '--seed', '0', '--jobs', '1']
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    assert ',nonexistent,' not in out
    assert invoke(capsys, *argv)[1] == out
