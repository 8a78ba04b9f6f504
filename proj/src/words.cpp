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

#include "reflektor/words.hpp"

#include <cctype>
#include <stdexcept>

namespace reflektor {
namespace {

class Parser {
public:
    Parser(const ReflectionRep& rep, const std::string& text) : rep_(rep), s_(text) {}

    FieldMatrix run() {
        FieldMatrix m = product();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return m;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("malformed word '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*' || s_[pos_] == '.'))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    FieldMatrix product() {
        FieldMatrix m = rep_.identity();
        for (;;) {
            skip_ws();
            if (pos_ == s_.size() || s_[pos_] == ')' || s_[pos_] == '}') return m;
            m = m * factor();
        }
    }

    FieldMatrix primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FieldMatrix m = product();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return m;
        }
        if (c == '1') {
            ++pos_;
            return rep_.identity();
        }
        if (c == 's') {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected generator index");
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const long i = std::stol(s_.substr(start, pos_ - start));
            if (i == 0) return s0_element(rep_);
            if (i > rep_.rank()) fail("generator index out of range");
            return rep_.generators[static_cast<std::size_t>(i - 1)];
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    FieldMatrix factor() {
        FieldMatrix m = primary();
        while (peek('^')) {
            ++pos_;
            skip_ws();
            if (peek('{')) {
                ++pos_;
                FieldMatrix w = product();
                if (!peek('}')) fail("expected '}'");
                ++pos_;
                m = conjugate(m, w);
            } else if (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
                m = m.pow(integer());
            } else {
                m = conjugate(m, primary());
            }
        }
        return m;
    }

    const ReflectionRep& rep_;
    std::string s_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

FieldMatrix eval_word(const ReflectionRep& rep, const std::string& word) { return Parser(rep, word).run(); }

std::pair<std::string, std::string> split_equation(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) return {trim(text), "1"};
    if (text.find('=', eq + 1) != std::string::npos) throw std::invalid_argument("more than one '=' in relation");
    std::string lhs = trim(text.substr(0, eq)), rhs = trim(text.substr(eq + 1));
    if (lhs.empty() || rhs.empty()) throw std::invalid_argument("empty side in relation");
    return {lhs, rhs};
}

}  // namespace reflektor
