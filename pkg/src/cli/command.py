from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, Field

from src.exception import ModpairError


class CommandResult(BaseModel):
    """Outcome of one script command: a verdict (None when the command only computes) and its witnesses."""

    verdict: Optional[bool] = Field(default=None)
    witnesses: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[Dict[str, Any]] = Field(default=None)

    @property
    def verdict_text(self) -> str:
        if self.verdict is None:
            return "n/a"
        return "pass" if self.verdict else "fail"


class ScriptCommand:
    """
    Base class of the script commands. Subclasses set the class attributes and implement `forward`.

    - **name** (`str`) -- the keyword the command is registered under.
    - **description** (`str`) -- one line for `--help` listings and docs.
    - **operands** (`Tuple[Optional[str], ...]`) -- the declared kind of each argument, checked
      before the run; `None` skips a literal argument and `new <kind>` marks a name the command declares.
    - **verdict_bearing** (`bool`) -- whether `verify` may prefix the command.
    - **soft_errors** (`Tuple[type, ...]`) -- errors reported as a failing verdict instead of aborting.
    """

    name: str
    description: str
    operands: Tuple[Optional[str], ...] = ()
    verdict_bearing: bool = False
    soft_errors: Tuple[type, ...] = ()

    @classmethod
    def declared_kind(cls, command) -> str:
        for kind in cls.operands:
            if kind is not None and kind.startswith("new "):
                return kind[len("new "):]
        raise ValueError(f"{cls.name} declares nothing")

    def forward(self, env, command) -> CommandResult:
        raise NotImplementedError("Write this method in your subclass of `ScriptCommand`.")

    def __call__(self, env, command) -> CommandResult:
        try:
            return self.forward(env, command)
        except self.soft_errors as error:
            if not isinstance(error, ModpairError):
                raise
            return CommandResult(verdict=False, error=error.dict())
