#pragma once
// Error taxonomy shared by all modules. Categories map onto the CLI
// exit codes: 2 config, 3 provider, 4 data.

#include <stdexcept>
#include <string>

namespace paudit {

enum class ErrorCategory { Internal = 1, Config = 2, Provider = 3, Data = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string message)
        : std::runtime_error(std::move(message)), category_(category) {}

    ErrorCategory category() const { return category_; }
    int exit_code() const { return static_cast<int>(category_); }

private:
    ErrorCategory category_;
};

#define PAUDIT_DEFINE_ERROR(NAME, CATEGORY)                                  \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(std::string message)                                   \
            : Error(ErrorCategory::CATEGORY,                                 \
                    std::string(#NAME ": ") + std::move(message)) {}         \
    }

PAUDIT_DEFINE_ERROR(ConfigError, Config);
PAUDIT_DEFINE_ERROR(IoError, Config);

PAUDIT_DEFINE_ERROR(ParseError, Data);
PAUDIT_DEFINE_ERROR(ValidationError, Data);
PAUDIT_DEFINE_ERROR(EmptyCorpus, Data);
PAUDIT_DEFINE_ERROR(EmptyGroup, Data);
PAUDIT_DEFINE_ERROR(PriorGap, Data);
PAUDIT_DEFINE_ERROR(DegenerateDenominator, Data);
PAUDIT_DEFINE_ERROR(GroupTooSmall, Data);
PAUDIT_DEFINE_ERROR(SampleTooSmall, Data);
PAUDIT_DEFINE_ERROR(ZeroVariance, Data);
PAUDIT_DEFINE_ERROR(DimensionMismatch, Data);
PAUDIT_DEFINE_ERROR(VocabularyTooSmall, Data);
PAUDIT_DEFINE_ERROR(MissingProfileField, Data);

PAUDIT_DEFINE_ERROR(ProviderUnavailable, Provider);
PAUDIT_DEFINE_ERROR(ScorerUnavailable, Provider);
PAUDIT_DEFINE_ERROR(MalformedResponse, Provider);
PAUDIT_DEFINE_ERROR(QuotaExceeded, Provider);

#undef PAUDIT_DEFINE_ERROR

}  // namespace paudit
