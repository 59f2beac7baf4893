import os
from pydantic import BaseModel, Field
from typing import Literal, Optional
import toml

from dotenv import load_dotenv
load_dotenv(verbose=False)

from src.utils import assemble_project_path


class OracleConfig(BaseModel):
    enabled: bool = Field(default=True,
                          description="Cross-check `member` commands against the Macaulay-matrix oracle")
    max_columns: int = Field(default=4000,
                             description="Refuse oracle matrices with more monomial columns than this")


class Config(BaseModel):

    # General Config
    workdir: str = "workdir"
    tag: str = "modpair"
    log_path: str = "log.txt"
    log_level: str = Field(default="ERROR",
                           description="Verbosity of diagnostics on stderr: OFF, ERROR, INFO or DEBUG")

    # Algebra Config
    order: Literal["grevlex", "lex"] = Field(default="grevlex",
                                             description="Active monomial order for printing and Gröbner reports")
    max_degree: int = Field(default=4,
                            description="Degree slack added to deg f + max generator degree for the oracle bound")

    # Report Config
    json_report: bool = Field(default=False,
                              description="Emit the machine-readable JSON mirror instead of text")
    timing_footer: bool = Field(default=True,
                                description="Append the non-canonical timing footer to text reports")

    oracle: OracleConfig = Field(default_factory=OracleConfig)

    def init_config(self, config_path: Optional[str] = None):
        """Load a toml file; missing keys keep their defaults. `MODPAIR_CONFIG` names the file when no path is given."""
        config_path = config_path or os.environ.get("MODPAIR_CONFIG")
        if config_path:
            with open(assemble_project_path(config_path), "r") as f:
                config = toml.load(f)
        else:
            config = {}

        # General Config
        self.tag = config.get("tag", self.tag)
        self.log_level = config.get("log_level", self.log_level)
        self.order = config.get("order", self.order)
        self.max_degree = config.get("max_degree", self.max_degree)
        self.json_report = config.get("json_report", self.json_report)
        self.timing_footer = config.get("timing_footer", self.timing_footer)

        # Create Workdir
        self.workdir = assemble_project_path(os.path.join(config.get("workdir", "workdir"), self.tag))
        os.makedirs(self.workdir, exist_ok=True)
        self.log_path = os.path.join(self.workdir, config.get("log_path", "log.txt"))

        if "oracle" in config:
            self.oracle = OracleConfig(**config["oracle"])

    def __str__(self):
        return self.model_dump_json(indent=4)


config = Config()
