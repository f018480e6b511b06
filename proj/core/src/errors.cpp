#include "ho/errors.hpp"

namespace ho {

ExitCode exit_code_for_current_exception() noexcept
{
    try {
        throw;
    } catch (const ParseError&) {
        return ExitCode::parse;
    } catch (const PreconditionError&) {
        return ExitCode::precondition;
    } catch (const DomainError&) {
        return ExitCode::numerical;
    } catch (const NumericalError&) {
        return ExitCode::numerical;
    } catch (...) {
        return ExitCode::internal;
    }
}

}  // namespace ho
