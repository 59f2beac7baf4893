from typing import Any, Dict

REGISTED_COMMANDS: Dict[str, Any] = {}


def register_command(command_id_or_cls=None):
    """
    Decorator to register a script command class under its DSL keyword.

    Usage:
        @register_command
        class Groebner: ...

        @register_command("tensor-fiber")
        class TensorFiber: ...
    """
    def decorator(cls):
        # Determine the registration key: use the keyword or the class name
        command_id = command_id_or_cls if isinstance(command_id_or_cls, str) else cls.__name__

        # Check for duplicate registration
        if command_id in REGISTED_COMMANDS:
            raise ValueError(f"Command ID '{command_id}' is already registered.")

        # Register the class (not instance)
        REGISTED_COMMANDS[command_id] = cls
        return cls

    # Support both @register_command and @register_command("keyword") usages
    if callable(command_id_or_cls):
        return decorator(command_id_or_cls)
    else:
        return decorator
