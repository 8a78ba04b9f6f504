/*
   Copyright 2025 The reflektor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "reflektor/refl.hpp"

#include <string>

namespace reflektor {

/// Evaluates a word such as "s1 s2^{s3 s2} (s1 s2)^-3 s0".
/// s0 is available on circuit presets; "1" denotes the identity.
/// Conjugation x^{w} is w^-1 x w. Throws std::invalid_argument on malformed input.
FieldMatrix eval_word(const ReflectionRep& rep, const std::string& word);

/// Splits "lhs = rhs" (rhs defaults to "1").
std::pair<std::string, std::string> split_equation(const std::string& text);

}  // namespace reflektor
