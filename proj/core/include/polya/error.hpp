/*
   Copyright 2026 The polya-cert Authors

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

#ifndef POLYA_ERROR_HPP
#define POLYA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polya {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation is undefined for the zero polynomial") {}
};

/// Raised when a routine requires P > 0 on [0, inf) and the input fails that.
class NotPositive : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    explicit UnsupportedDegree(int d)
        : Error("unsupported degree " + std::to_string(d)), degree_(d) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class DenominatorZero : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// An exact self-check disagreed. Indicates a bug or an incorrect closed form.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

}  // namespace polya

#endif
