#  MIT License
#
#  Copyright (c) 2024 Ian Buttimer
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM,OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
"""
Enum base classes
"""
from enum import Enum
from typing import TypeVar, Any, Callable, List, Optional, Tuple

TypeChoiceArg = TypeVar("TypeChoiceArg", bound="ChoiceArg")


class ChoiceArg(Enum):
    """ Enum representing options with limited choices """
    display: str
    """ Display string """
    arg: Any
    """ Argument value, as used in config files and on the command line """

    def __init__(self, display: str, arg: Any):
        self.display = display
        self.arg = arg

    @staticmethod
    def _lower_str(val):
        """ Lower string value function for filtering """
        return val.lower() if isinstance(val, str) else val

    @classmethod
    def _find_value(
            cls, arg: Any, func: Callable) -> Optional[TypeChoiceArg]:
        """
        Get value matching specified `arg`
        :param arg: arg to find
        :param func: value transform function to be applied before comparison
        :return: ChoiceArg value or None if not found or multiple matches
        """
        matches = [val for val in cls if func(val) == arg]
        return matches[0] if len(matches) == 1 else None

    @classmethod
    def from_arg(cls, arg: Any) -> Optional[TypeChoiceArg]:
        """
        Get value matching specified `arg`, case-insensitive
        :param arg: arg to find
        :return: ChoiceArg value or None if not found or multiple matches
        """
        return cls._find_value(
            cls._lower_str(arg), lambda val: cls._lower_str(val.arg))

    @classmethod
    def from_str(cls, arg: Any) -> TypeChoiceArg:
        """
        Get value matching specified `arg`, case-insensitive
        :param arg: arg to find
        :return: ChoiceArg value
        :raises ValueError: if not found
        """
        choice = cls.from_arg(arg)
        if choice is None:
            raise ValueError(
                f"Unknown {cls.__name__} '{arg}', expected one of "
                f"{', '.join(str(val.arg) for val in cls)}")
        return choice

    @classmethod
    def choices(cls) -> List[Tuple[Any, str]]:
        """
        Get the (arg, display) pairs for use in a ChoiceField
        :return: list of choices
        """
        return [(val.arg, val.display) for val in cls]
