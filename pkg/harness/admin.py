from django.contrib import admin

from .models import ErrorRecordEntry, VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ('command', 'preset', 'function_id', 'level', 'status', 'records_count', 'started_at', 'completed_at')
    list_filter = ('command', 'status', 'started_at')
    search_fields = ('command', 'preset', 'function_id')
    readonly_fields = ('id', 'started_at', 'completed_at')


@admin.register(ErrorRecordEntry)
class ErrorRecordEntryAdmin(admin.ModelAdmin):
    list_display = ('run', 'position', 'function', 'level', 'rel_err', 'err_estimate', 'status')
    list_filter = ('function', 'level', 'status')
    search_fields = ('function', 'run__command', 'run__preset')
    readonly_fields = ('run', 'position')
