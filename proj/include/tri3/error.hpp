/*
 * Copyright 2026 The tri3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tri3 {

/// Root of every error raised by the library. `kind()` is a stable
/// identifier that also appears in reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Malformed input: bad config values, unreadable files, wrong map length.
/// The CLI maps this to exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("InputError", what) {}
};

class SizeLimitExceeded : public Error {
public:
    explicit SizeLimitExceeded(const std::string& what) : Error("SizeLimitExceeded", what) {}
};

/// An algebraic axiom failed. `witness` holds the offending element indices
/// (lexicographically smallest violating tuple).
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<std::size_t> witness, const std::string& where)
        : Error("AxiomViolation", where + ": " + axiom + " fails at " + render(witness)),
          axiom_(std::move(axiom)), witness_(std::move(witness)) {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    static std::string render(const std::vector<std::size_t>& w) {
        std::string s = "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
        return s + ")";
    }

    std::string axiom_;
    std::vector<std::size_t> witness_;
};

class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& what) : Error("RingMismatch", what) {}
};

class ModuleMismatch : public Error {
public:
    explicit ModuleMismatch(const std::string& what) : Error("ModuleMismatch", what) {}
};

class FaithfulnessViolation : public Error {
public:
    explicit FaithfulnessViolation(const std::string& what)
        : Error("FaithfulnessViolation", what) {}
};

class HashMismatch : public Error {
public:
    explicit HashMismatch(const std::string& what) : Error("HashMismatch", what) {}
};

/// The brute-force center and the diagonal characterization disagree.
class InternalCharacterizationMismatch : public Error {
public:
    explicit InternalCharacterizationMismatch(const std::string& what)
        : Error("InternalCharacterizationMismatch", what) {}
};

/// A structural claim that must hold on a verified input did not. Either the
/// implementation is wrong or the instance falsifies the claim; both are loud.
class TheoremInvariantViolation : public Error {
public:
    explicit TheoremInvariantViolation(const std::string& what)
        : Error("TheoremInvariantViolation", what) {}
};

class NotMLD : public Error {
public:
    explicit NotMLD(const std::string& what) : Error("NotMLD", what) {}
};

class StandardAssumptionViolated : public Error {
public:
    explicit StandardAssumptionViolated(const std::string& what)
        : Error("StandardAssumptionViolated", what) {}
};

class GenerationFailed : public Error {
public:
    explicit GenerationFailed(const std::string& what) : Error("GenerationFailed", what) {}
};

} // namespace tri3
