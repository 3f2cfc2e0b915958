import os
import sys
from subprocess import PIPE, run

import pytest
from pydantic import ValidationError

import depthlab
from depthlab import DepthLab, RunConfig


def test_caps_from_env_file():
    project_dir = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    env_file = os.path.join(project_dir, ".env")
    env_backup_file = os.path.join(project_dir, ".env.backup")
    if os.path.exists(env_file):
        os.rename(env_file, env_backup_file)
    try:
        check_command = [sys.executable, "-c", "import depthlab\nassert depthlab.options.CAP_DELTA == 7"]
        with open(env_file, "w") as env_f:
            env_f.write("DEPTHLAB_CAP_DELTA=7")
        r = run(check_command, stderr=PIPE, env={}, cwd=project_dir, check=False)
        assert not r.stderr
        check_command = [sys.executable, "-c", "import depthlab\nassert depthlab.options.CAP_DELTA == 14"]
        with open(env_file, "w") as env_f:
            env_f.write("DEPTHLAB_CAP_DELTA=seven")
        r = run(check_command, stderr=PIPE, env={}, cwd=project_dir, check=False)
        assert not r.stderr
        check_command = [sys.executable, "-c", "import depthlab\nassert depthlab.options.CAP_LATTICE == 200000"]
        with open(env_file, "w") as env_f:
            env_f.write("DEPTHLAB_CAP_LATTICE=-5")
        r = run(check_command, stderr=PIPE, env={}, cwd=project_dir, check=False)
        assert not r.stderr
        check_command = [
            sys.executable,
            "-c",
            "import depthlab\nassert depthlab.RunConfig().field == 'p:3'\nassert depthlab.RunConfig().kmax == 5",
        ]
        with open(env_file, "w") as env_f:
            env_f.write("DEPTHLAB_FIELD=P:3\nDEPTHLAB_KMAX=5")
        r = run(check_command, stderr=PIPE, env={}, cwd=project_dir, check=False)
        assert not r.stderr
    finally:
        os.remove(env_file)
        if os.path.exists(env_backup_file):
            os.rename(env_backup_file, env_file)


def test_run_config_defaults():
    config = RunConfig()
    assert config.field == depthlab.options.FIELD
    assert config.caps.delta == depthlab.options.CAP_DELTA
    assert config.output_format == "text"


def test_run_config_field():
    assert RunConfig(field="P:3").field == "p:3"
    assert RunConfig(field=" q ").field == "q"
    assert RunConfig(field="p:3").homology_field.characteristic == 3
    for bad in ("p:4", "r", "p:"):
        with pytest.raises(ValidationError):
            RunConfig(field=bad)


def test_run_config_ranges():
    with pytest.raises(ValidationError):
        RunConfig(kmax=0)
    with pytest.raises(ValidationError):
        RunConfig.from_env(cap_lattice=0)
    with pytest.raises(ValidationError):
        RunConfig(output_format="yaml")


def test_from_env_kwargs():
    config = RunConfig.from_env(cap_lattice=10, kmax=2, seed=None, caps={"delta": 5})
    assert config.caps.lattice == 10
    assert config.caps.delta == 5
    assert config.kmax == 2
    assert config.seed == depthlab.options.SEED
    lab = DepthLab(cap_search=3, field="p:2")
    assert lab.config.caps.search == 3
    assert str(lab.config.homology_field) == "p:2"
    assert DepthLab(config).config is config
